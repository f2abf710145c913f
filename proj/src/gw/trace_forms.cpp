#include "twotors/gw/forms.hpp"

namespace twotors::gw {

std::vector<Rational> power_sums(const Poly& p, std::size_t count) {
  if (p.degree() < 1) throw MathError(ErrorKind::InvalidArgument, "power sums need degree >= 1");
  const Poly m = p.monic();
  const std::size_t n = static_cast<std::size_t>(m.degree());
  // m = x^n + c[n-1] x^{n-1} + ... + c[0]
  std::vector<Rational> s(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (k == 0) {
      s[0] = Rational(static_cast<long>(n));
      continue;
    }
    Rational acc(0);
    for (std::size_t i = 1; i <= std::min(k - 1, n); ++i) acc += m.coeff(n - i) * s[k - i];
    if (k <= n) acc += Rational(static_cast<long>(k)) * m.coeff(n - k);
    s[k] = -acc;
  }
  return s;
}

GramMatrix trace_gram(const Poly& q, const Poly& alpha) {
  if (q.degree() < 1) throw MathError(ErrorKind::InvalidArgument, "modulus needs degree >= 1");
  const auto n = static_cast<Eigen::Index>(q.degree());
  const auto traces = power_sums(q, static_cast<std::size_t>(n));
  const auto trace = [&](const Poly& f) {
    Rational t(0);
    for (std::size_t k = 0; k < f.coefficients().size(); ++k) t += f.coefficients()[k] * traces[k];
    return t;
  };
  // alpha * x^m mod q for m = 0 .. 2n-2
  std::vector<Rational> row_traces(static_cast<std::size_t>(2 * n - 1));
  Poly cur = alpha % q;
  for (std::size_t m = 0; m < row_traces.size(); ++m) {
    row_traces[m] = trace(cur);
    cur = (cur * Poly::x()) % q;
  }
  GramMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = row_traces[static_cast<std::size_t>(i + j)];
  return g;
}

GWElement scaled_trace_transfer(const Poly& q, const Poly& alpha) {
  if (!is_squarefree(q)) throw MathError(ErrorKind::NotSquarefree, "modulus " + to_string(q));
  if (gcd(alpha, q).degree() != 0)
    throw MathError(ErrorKind::NotInvertible, to_string(alpha) + " mod " + to_string(q));
  return diagonalize(trace_gram(q, alpha));
}

GWElement trace_form_weighted(const Poly& p) {
  if (!is_squarefree(p)) throw MathError(ErrorKind::NotSquarefree, to_string(p));
  return diagonalize(trace_gram(p, inverse_mod(p.derivative(), p)));
}

}  // namespace twotors::gw
