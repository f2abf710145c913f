#pragma once

#include <compare>
#include <string>

#include "twotors/exact/rational.hpp"
#include "twotors/exact/square_class.hpp"

namespace twotors {

/// A place of Q: the real place or a finite prime.
class Place {
 public:
  static Place real() { return Place(Integer(0)); }
  /// Throws MathError(BadPrime) unless p is prime.
  static Place finite(const Integer& p);
  static Place finite(long p) { return finite(Integer(p)); }

  bool is_real() const { return prime_ == 0; }
  /// 0 for the real place.
  const Integer& prime() const { return prime_; }
  std::string str() const { return is_real() ? std::string("inf") : prime_.get_str(); }

  friend bool operator==(const Place& a, const Place& b) { return a.prime_ == b.prime_; }
  // Real place sorts first.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b) {
    const int c = cmp(a.prime_, b.prime_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Place(Integer p) : prime_(std::move(p)) {}
  Integer prime_;
};

/// Legendre symbol (a|p) for an odd prime p. Throws MathError(BadPrime).
int legendre(const Integer& a, const Integer& p);

/// Hilbert symbol (a,b)_v. Throws MathError(ZeroInput) on zero arguments.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);
int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v);

}  // namespace twotors
