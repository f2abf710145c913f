#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twotors/exact/polynomial.hpp"

namespace twotors::cli {

/// Syntax error in a polynomial or rational list, with the byte offset of
/// the offending input and the tokens that would have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::set<std::string> expected, const std::string& what);

  std::size_t offset() const noexcept { return offset_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::set<std::string> expected_;
};

// Grammar (whitespace insignificant):
//   expr     := term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := base ("^" uint)?
//   base     := rational | "x" | "(" expr ")"
//   rational := ["-"] uint ("/" uint)?
// There is no implicit multiplication: "2(x+1)" and "2x" are rejected.
Poly parse_poly(std::string_view text);

/// Comma-separated rationals, e.g. "0,1/2,-3".
std::vector<Rational> parse_rational_list(std::string_view text);

/// Comma-separated bits, e.g. "1,0,1". Empty text is the empty list.
std::vector<int> parse_bit_list(std::string_view text);

}  // namespace twotors::cli
