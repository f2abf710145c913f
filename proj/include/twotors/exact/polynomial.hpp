#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "twotors/error.hpp"
#include "twotors/exact/rational.hpp"

namespace twotors {

/// Dense univariate polynomial over a field, lowest degree first.
/// Trailing zeros are stripped; the zero polynomial has no coefficients.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Scalar& a) { return Polynomial({a}); }
  static Polynomial x() { return Polynomial({Scalar(0), Scalar(1)}); }
  /// x - root
  static Polynomial linear(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }
  static Polynomial monomial(const Scalar& a, std::size_t degree) {
    std::vector<Scalar> c(degree + 1, Scalar(0));
    c[degree] = a;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return c_; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const { return Polynomial() - *this; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(Polynomial a, const Scalar& s) {
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
  }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return std::move(a) * s; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(Scalar(1));
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
  }

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw MathError(ErrorKind::ZeroInput, "polynomial division by zero");
    if (degree() < d.degree()) return {Polynomial(), *this};
    std::vector<Scalar> r = c_;
    std::vector<Scalar> q(c_.size() - d.c_.size() + 1, Scalar(0));
    const Scalar lead_inv = d.leading().inverse();
    for (int k = degree() - d.degree(); k >= 0; --k) {
      const Scalar f = r[k + d.degree()] * lead_inv;
      q[k] = f;
      if (f == Scalar(0)) continue;
      for (int j = 0; j <= d.degree(); ++j) r[k + j] -= f * d.c_[j];
    }
    r.resize(d.c_.size() - 1);
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& d) { return a.divmod(d).second; }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& d) { return a.divmod(d).first; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

/// Monic gcd (zero if both inputs are zero).
template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    Polynomial<Scalar> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Inverse of a modulo m via the extended Euclidean algorithm.
/// Throws MathError(NotInvertible) when gcd(a, m) is non-constant.
template <typename Scalar>
Polynomial<Scalar> inverse_mod(const Polynomial<Scalar>& a, const Polynomial<Scalar>& m) {
  using P = Polynomial<Scalar>;
  P r0 = m, r1 = a % m;
  P s0, s1 = P::constant(Scalar(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    P s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw MathError(ErrorKind::NotInvertible, "element is not a unit modulo p");
  return (s0 * r0.leading().inverse()) % m;
}

/// Resultant over a field by the Euclidean recursion.
template <typename Scalar>
Scalar resultant(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  if (a.is_zero() || b.is_zero()) return Scalar(0);
  Scalar acc(1);
  while (true) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) return acc * b.leading().pow(m);
    if (m == 0) return acc * a.leading().pow(n);
    Polynomial<Scalar> r = a % b;
    if (r.is_zero()) return Scalar(0);
    // Res(a,b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
    if ((m * n) % 2 == 1) acc = -acc;
    acc *= b.leading().pow(m - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
}

/// disc(p) = (-1)^{n(n-1)/2} Res(p, p') / lc(p). Requires deg p >= 1.
template <typename Scalar>
Scalar discriminant(const Polynomial<Scalar>& p) {
  if (p.degree() < 1) throw MathError(ErrorKind::InvalidArgument, "discriminant needs degree >= 1");
  const long n = p.degree();
  if (n == 1) return Scalar(1);
  Scalar r = resultant(p, p.derivative()) / p.leading();
  return ((n * (n - 1) / 2) % 2 == 1) ? -r : r;
}

template <typename Scalar>
bool is_squarefree(const Polynomial<Scalar>& p) {
  return p.degree() >= 1 && gcd(p, p.derivative()).degree() == 0;
}

using Poly = Polynomial<Rational>;

inline Rational poly_eval(const Poly& p, const Rational& x) { return p(x); }
inline Poly poly_derivative(const Poly& p) { return p.derivative(); }
inline Rational poly_discriminant(const Poly& p) { return discriminant(p); }

/// All rational roots with multiplicity, ascending, by the rational-root
/// test on the primitive integer form.
std::vector<Rational> rational_roots(const Poly& p);

/// Human-readable rendering in the CLI polynomial grammar, e.g. "1/3*x^3 - x".
std::string to_string(const Poly& p);

}  // namespace twotors
