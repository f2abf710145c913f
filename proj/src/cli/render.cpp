#include "twotors/cli/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <unistd.h>

namespace twotors::cli {

std::string to_string(Check::Status s) {
  switch (s) {
    case Check::Status::Pass: return "pass";
    case Check::Status::Fail: return "fail";
    case Check::Status::Reported: return "reported";
  }
  return "fail";
}

Json to_json(const Check& c) {
  return Json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"status", to_string(c.status)}};
}

std::string Table::render(bool styled) const {
  std::vector<std::size_t> width(headers_.size(), 0);
  for (std::size_t i = 0; i < headers_.size(); ++i) width[i] = headers_[i].size();
  for (const auto& row : rows_)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());

  std::ostringstream os;
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < width.size(); ++i) {
      const std::string cell = i < cells.size() ? cells[i] : "";
      if (i > 0) os << "  ";
      os << cell;
      if (i + 1 < width.size()) os << std::string(width[i] - cell.size(), ' ');
    }
    os << "\n";
  };
  if (styled) os << "\x1b[1m";
  line(headers_);
  if (styled) os << "\x1b[0m";
  std::size_t total = 0;
  for (auto w : width) total += w;
  os << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << "\n";
  for (const auto& row : rows_) line(row);
  return os.str();
}

bool use_style() {
  const char* no_color = std::getenv("NO_COLOR");
  if (no_color != nullptr) return false;
  return isatty(STDOUT_FILENO) != 0;
}

std::string render_checks(const std::vector<Check>& checks, bool styled) {
  if (checks.empty()) return "";
  std::ostringstream os;
  for (const auto& c : checks) {
    std::string tag = c.status == Check::Status::Pass   ? "PASS"
                      : c.status == Check::Status::Fail ? "FAIL"
                                                        : "REPORTED";
    if (styled) {
      const char* color = c.status == Check::Status::Pass ? "\x1b[32m"
                          : c.status == Check::Status::Fail ? "\x1b[31m"
                                                            : "\x1b[33m";
      tag = std::string(color) + tag + "\x1b[0m";
    }
    os << "[" << tag << "] " << c.name << ": expected " << c.expected << ", got " << c.actual << "\n";
  }
  return os.str();
}

Json to_json(const gw::FormInvariants& inv) {
  Json hasse = Json::object();
  for (const auto& [place, h] : inv.hasse) hasse[place.str()] = h;
  return Json{{"rank", inv.rank},
              {"signature", inv.signature},
              {"discriminant", inv.discriminant.str()},
              {"hasse", hasse}};
}

Json bits_to_json(const std::vector<int>& bits) {
  Json arr = Json::array();
  for (int b : bits) arr.push_back(b);
  return arr;
}

std::string bits_to_string(const std::vector<int>& bits) {
  std::string out;
  for (int b : bits) out += b ? '1' : '0';
  return out.empty() ? "-" : out;
}

}  // namespace twotors::cli
