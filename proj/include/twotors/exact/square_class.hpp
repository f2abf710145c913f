#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "twotors/exact/rational.hpp"

namespace twotors {

/// An element of Q^x/(Q^x)^2, stored as the signed squarefree integer
/// sign * prod(primes). The class of 1 is (+1, {}).
class SquareClass {
 public:
  SquareClass() = default;

  /// Throws MathError(ZeroInput) for zero.
  static SquareClass of(const Rational& r);
  static SquareClass of(const Integer& n) { return of(Rational(n)); }
  static SquareClass of(long n) { return of(Rational(n)); }
  static SquareClass minus_one() { return SquareClass(-1, {}); }

  int sign() const { return sign_; }
  const std::vector<Integer>& primes() const { return primes_; }

  /// The canonical signed squarefree integer.
  Integer value() const;
  bool is_one() const { return sign_ > 0 && primes_.empty(); }
  std::string str() const { return value().get_str(); }

  friend bool operator==(const SquareClass&, const SquareClass&) = default;
  friend std::strong_ordering operator<=>(const SquareClass& a, const SquareClass& b);

 private:
  SquareClass(int sign, std::vector<Integer> primes) : sign_(sign), primes_(std::move(primes)) {}
  friend SquareClass sc_mul(const SquareClass&, const SquareClass&);

  int sign_ = 1;
  std::vector<Integer> primes_;
};

inline SquareClass square_class(const Rational& r) { return SquareClass::of(r); }

/// Group law: product of signs, symmetric difference of prime sets.
SquareClass sc_mul(const SquareClass& a, const SquareClass& b);

inline SquareClass operator*(const SquareClass& a, const SquareClass& b) { return sc_mul(a, b); }

/// Image under Q^x/(Q^x)^2 -> R^x/(R^x)^2 = {+1, -1}.
inline int real_sign(const SquareClass& a) { return a.sign(); }

std::ostream& operator<<(std::ostream& os, const SquareClass& a);

}  // namespace twotors
