#include "twotors/exact/factor.hpp"

#include <cstdint>
#include <vector>

#include "twotors/error.hpp"

namespace twotors {
namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's variant of Pollard rho. n is odd, composite, free of primes <= kTrialLimit.
Integer pollard_brent(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    const auto step = [&](Integer& v) {
      v = v * v + c;
      v %= n;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < m && i < r - k; ++i) {
          step(y);
          Integer diff = x - y;
          q = (q * abs(diff)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        Integer diff = x - ys;
        Integer absdiff = abs(diff);
        mpz_gcd(g.get_mpz_t(), absdiff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  const Integer d = pollard_brent(n);
  factor_large(d, out);
  factor_large(Integer(n / d), out);
}

}  // namespace

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::map<Integer, unsigned> factorize(const Integer& n) {
  if (n == 0) throw MathError(ErrorKind::ZeroInput, "factorize(0)");
  std::map<Integer, unsigned> out;
  Integer rest = abs(n);
  for (unsigned long p : small_primes()) {
    if (rest == 1) break;
    if (Integer(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    out[Integer(p)] += e;
  }
  if (rest == 1) return out;
  if (rest <= Integer(kTrialLimit) * kTrialLimit) {
    ++out[rest];
    return out;
  }
  factor_large(rest, out);
  return out;
}

}  // namespace twotors
