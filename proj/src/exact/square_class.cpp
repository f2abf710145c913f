#include "twotors/exact/square_class.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>

#include "twotors/error.hpp"
#include "twotors/exact/factor.hpp"

namespace twotors {

SquareClass SquareClass::of(const Rational& r) {
  if (r.is_zero()) throw MathError(ErrorKind::ZeroInput, "square class of zero");
  // num/den and num*den differ by the square den^2.
  const Integer n = r.num() * r.den();
  std::vector<Integer> odd;
  for (const auto& [p, e] : factorize(n))
    if (e % 2 == 1) odd.push_back(p);
  return SquareClass(r.sign(), std::move(odd));
}

Integer SquareClass::value() const {
  Integer v = sign_;
  for (const auto& p : primes_) v *= p;
  return v;
}

std::strong_ordering operator<=>(const SquareClass& a, const SquareClass& b) {
  const int c = cmp(a.value(), b.value());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

SquareClass sc_mul(const SquareClass& a, const SquareClass& b) {
  std::vector<Integer> primes;
  std::set_symmetric_difference(a.primes_.begin(), a.primes_.end(), b.primes_.begin(),
                                b.primes_.end(), std::back_inserter(primes));
  return SquareClass(a.sign_ * b.sign_, std::move(primes));
}

std::ostream& operator<<(std::ostream& os, const SquareClass& a) { return os << a.str(); }

}  // namespace twotors
