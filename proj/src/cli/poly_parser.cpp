#include "twotors/cli/poly_parser.hpp"

#include <cctype>

namespace twotors::cli {
namespace {

constexpr unsigned long kMaxExponent = 256;

std::string describe(const std::set<std::string>& expected) {
  std::string out;
  for (const auto& e : expected) {
    if (!out.empty()) out += ", ";
    out += e;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly parse() {
    skip_ws();
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"+", "-", "*", "^", "end of input"});
    return p;
  }

 private:
  Poly expr() {
    Poly acc = term();
    for (;;) {
      skip_ws();
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_ws();
      if (!peek('*')) return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  Poly factor() {
    Poly b = base();
    skip_ws();
    if (!peek('^')) return b;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    const Integer e = uint();
    if (e > kMaxExponent) throw ParseError(at, {"exponent <= 256"}, "exponent too large");
    return b.pow(static_cast<unsigned>(e.get_ui()));
  }

  Poly base() {
    skip_ws();
    if (peek('x')) {
      ++pos_;
      return Poly::x();
    }
    if (peek('(')) {
      ++pos_;
      Poly inner = expr();
      skip_ws();
      if (!peek(')')) fail({")", "+", "-", "*", "^"});
      ++pos_;
      return inner;
    }
    if (peek('-') || digit()) return Poly::constant(rational());
    fail({"rational", "x", "("});
  }

  Rational rational() {
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
    }
    Integer num = uint();
    Integer den = 1;
    if (peek('/')) {
      ++pos_;
      const std::size_t at = pos_;
      den = uint();
      if (den == 0) throw ParseError(at, {"nonzero uint"}, "zero denominator");
    }
    if (negative) num = -num;
    return Rational(num, den);
  }

  Integer uint() {
    const std::size_t start = pos_;
    while (digit()) ++pos_;
    if (pos_ == start) fail({"uint"});
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const std::string found =
        pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : std::string("end of input");
    const std::string msg = "at offset " + std::to_string(pos_) + ": found " + found + ", expected one of {" +
                            describe(expected) + "}";
    throw ParseError(pos_, std::move(expected), msg);
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <typename Fn>
void for_each_item(std::string_view text, Fn&& fn) {
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    std::size_t lead = 0;
    while (lead < item.size() && std::isspace(static_cast<unsigned char>(item[lead]))) ++lead;
    std::size_t trail = item.size();
    while (trail > lead && std::isspace(static_cast<unsigned char>(item[trail - 1]))) --trail;
    fn(item.substr(lead, trail - lead), start + lead);
    start = comma + 1;
  }
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::set<std::string> expected, const std::string& what)
    : std::runtime_error(what), offset_(offset), expected_(std::move(expected)) {}

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for_each_item(text, [&](std::string_view item, std::size_t offset) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw ParseError(offset, {"rational"}, "at offset " + std::to_string(offset) + ": bad rational '" +
                                                 std::string(item) + "'");
    }
  });
  return out;
}

std::vector<int> parse_bit_list(std::string_view text) {
  std::vector<int> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  for_each_item(text, [&](std::string_view item, std::size_t offset) {
    if (item != "0" && item != "1")
      throw ParseError(offset, {"0", "1"}, "at offset " + std::to_string(offset) + ": bad bit '" +
                                               std::string(item) + "'");
    out.push_back(item == "1" ? 1 : 0);
  });
  return out;
}

}  // namespace twotors::cli
