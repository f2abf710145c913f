#include "twotors/exact/symbols.hpp"

#include "twotors/error.hpp"
#include "twotors/exact/factor.hpp"

namespace twotors {
namespace {

// Splits a nonzero squarefree integer n = p^alpha * unit with alpha in {0,1}.
int strip_prime(Integer& n, const Integer& p) {
  if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) == 0) return 0;
  n /= p;
  return 1;
}

int mod_small(const Integer& n, unsigned long m) {
  return static_cast<int>(mpz_fdiv_ui(n.get_mpz_t(), m));
}

// epsilon(u) = (u-1)/2 mod 2 and omega(u) = (u^2-1)/8 mod 2 for odd u.
int eps2(const Integer& u) { return mod_small(u, 4) == 3 ? 1 : 0; }
int omega2(const Integer& u) {
  const int r = mod_small(u, 8);
  return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

Place Place::finite(const Integer& p) {
  if (!is_probable_prime(p)) throw MathError(ErrorKind::BadPrime, p.get_str() + " is not prime");
  return Place(p);
}

int legendre(const Integer& a, const Integer& p) {
  if (p == 2 || !is_probable_prime(p))
    throw MathError(ErrorKind::BadPrime, p.get_str() + " is not an odd prime");
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v) {
  if (v.is_real()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
  const Integer& p = v.prime();
  Integer u = a.value();
  Integer w = b.value();
  const int alpha = strip_prime(u, p);
  const int beta = strip_prime(w, p);
  if (p == 2) {
    const int e = eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  int result = 1;
  if (alpha * beta == 1 && mod_small(p, 4) == 3) result = -result;
  if (beta == 1) result *= legendre(u, p);
  if (alpha == 1) result *= legendre(w, p);
  return result;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (a.is_zero() || b.is_zero()) throw MathError(ErrorKind::ZeroInput, "hilbert symbol of zero");
  return hilbert_symbol(SquareClass::of(a), SquareClass::of(b), v);
}

}  // namespace twotors
