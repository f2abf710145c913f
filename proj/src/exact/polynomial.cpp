#include "twotors/exact/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "twotors/exact/factor.hpp"

namespace twotors {
namespace {

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

// Scales p to an integer polynomial and returns its coefficients.
std::vector<Integer> integer_form(const Poly& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<Integer> out;
  for (const auto& c : p.coefficients()) out.push_back(c.num() * (l / c.den()));
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  Poly rest = p;
  while (rest.coeff(0) == Rational(0) && rest.degree() >= 1) {
    roots.emplace_back(0);
    rest = rest / Poly::x();
  }
  if (rest.degree() >= 1) {
    const auto ints = integer_form(rest);
    const auto nums = positive_divisors(ints.front());
    const auto dens = positive_divisors(ints.back());
    std::vector<Rational> candidates;
    for (const auto& a : nums)
      for (const auto& b : dens) {
        candidates.emplace_back(a, b);
        candidates.emplace_back(Integer(-a), b);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      while (rest.degree() >= 1 && rest(r).is_zero()) {
        roots.push_back(r);
        rest = rest / Poly::linear(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p.coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    // A leading "-" must start a rational in the input grammar, so a negative
    // leading unit is written "-1*x".
    const bool unit = mag == Rational(1) && !(c.sign() < 0 && k == p.degree());
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace twotors
