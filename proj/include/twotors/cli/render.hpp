#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "twotors/gw/forms.hpp"

namespace twotors::cli {

using Json = nlohmann::json;

/// One entry of the "paper_checks" array.
struct Check {
  enum class Status { Pass, Fail, Reported };

  std::string name;
  std::string expected;
  std::string actual;
  Status status = Status::Pass;

  static Check compare(std::string name, std::string expected, std::string actual) {
    const bool ok = expected == actual;
    return {std::move(name), std::move(expected), std::move(actual), ok ? Status::Pass : Status::Fail};
  }
  static Check reported(std::string name, std::string expected, std::string actual) {
    return {std::move(name), std::move(expected), std::move(actual), Status::Reported};
  }
};

std::string to_string(Check::Status s);
Json to_json(const Check& c);

/// Aligned plain-text table. Styling (bold header) is only applied when
/// requested; callers pass use_style().
class Table {
 public:
  explicit Table(std::vector<std::string> headers) : headers_(std::move(headers)) {}
  void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string render(bool styled) const;

 private:
  std::vector<std::string> headers_;
  std::vector<std::vector<std::string>> rows_;
};

/// True when stdout is a terminal and NO_COLOR is unset.
bool use_style();

std::string render_checks(const std::vector<Check>& checks, bool styled);

Json to_json(const gw::FormInvariants& inv);
Json bits_to_json(const std::vector<int>& bits);
std::string bits_to_string(const std::vector<int>& bits);

}  // namespace twotors::cli
