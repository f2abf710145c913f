#include "twotors/curves/divisor.hpp"

#include <algorithm>

#include "twotors/error.hpp"

namespace twotors::curves {

Rational divisor_eval(const HyperellipticModel& m, const Poly& num, const Poly& den, const Divisor& d) {
  if (num.is_zero() || den.is_zero()) throw MathError(ErrorKind::ZeroInput, "function is zero");
  Rational acc(1);
  for (const auto& [point, mult] : d) {
    if (mult == 0) continue;
    Rational value;
    long exponent = mult;
    if (const auto* w = std::get_if<WeierstrassPoint>(&point)) {
      if (w->index >= m.root_count()) throw MathError(ErrorKind::InvalidArgument, "root index out of range");
      const Rational& z = m.roots()[w->index];
      const Rational a = num(z), b = den(z);
      if (a.is_zero() || b.is_zero())
        throw MathError(ErrorKind::SupportCollision, "P_" + std::to_string(w->index) + " lies on div(f)");
      value = a / b;
    } else {
      if (num.degree() != den.degree())
        throw MathError(ErrorKind::SupportCollision, "infinity lies on div(f)");
      value = num.leading() / den.leading();
      exponent *= 2;
    }
    acc *= value.pow(exponent);
  }
  return acc;
}

Poly XRatio::numerator(const HyperellipticModel& m) const {
  Poly p = Poly::constant(Rational(1));
  for (const auto& [i, e] : exponents)
    if (e > 0) p = p * Poly::linear(m.roots().at(i)).pow(static_cast<unsigned>(e));
  return p;
}

Poly XRatio::denominator(const HyperellipticModel& m) const {
  Poly p = Poly::constant(Rational(1));
  for (const auto& [i, e] : exponents)
    if (e < 0) p = p * Poly::linear(m.roots().at(i)).pow(static_cast<unsigned>(-e));
  return p;
}

Divisor XRatio::divisor() const {
  Divisor d;
  long total = 0;
  for (const auto& [i, e] : exponents) {
    if (e == 0) continue;
    d[WeierstrassPoint{i}] += 2 * e;
    total += e;
  }
  if (total != 0) d[InfinityPair{}] -= total;
  return d;
}

std::pair<Rational, Rational> weil_reciprocity_sides(const HyperellipticModel& m, const XRatio& f,
                                                     const XRatio& g) {
  const auto degree = [](const XRatio& r) {
    long t = 0;
    for (const auto& kv : r.exponents) t += kv.second;
    return t;
  };
  if (degree(f) != 0 || degree(g) != 0)
    throw MathError(ErrorKind::InvalidArgument, "reciprocity check needs degree-0 x-ratios");
  for (const auto& [i, e] : f.exponents) {
    const auto it = g.exponents.find(i);
    if (e != 0 && it != g.exponents.end() && it->second != 0)
      throw MathError(ErrorKind::SharedSupport, "both functions involve root " + std::to_string(i));
  }
  const Rational lhs = divisor_eval(m, f.numerator(m), f.denominator(m), g.divisor());
  const Rational rhs = divisor_eval(m, g.numerator(m), g.denominator(m), f.divisor());
  return {lhs, rhs};
}

bool weil_reciprocity_check(const HyperellipticModel& m, const XRatio& f, const XRatio& g) {
  const auto [lhs, rhs] = weil_reciprocity_sides(m, f, g);
  return lhs == rhs;
}

Rational q2_by_divisor(const HyperellipticModel& m, const TwoTorsionClass& s, const Rational& c) {
  if (s.root_count() != m.root_count()) throw MathError(ErrorKind::ModelMismatch, "class/model mismatch");
  const auto& roots = m.roots();
  if (std::find(roots.begin(), roots.end(), c) != roots.end())
    throw MathError(ErrorKind::SupportCollision, "auxiliary point " + c.str() + " is a root");
  Poly num = Poly::constant(Rational(1));
  long size = 0;
  Divisor minus_d1;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if ((s.mask() >> i) & 1) {
      num = num * Poly::linear(roots[i]);
      ++size;
    } else {
      minus_d1[WeierstrassPoint{i}] = -1;
    }
  }
  const long complement = static_cast<long>(roots.size()) - size;
  minus_d1[InfinityPair{}] = complement / 2;
  const Poly den = Poly::linear(c).pow(static_cast<unsigned>(size));
  return divisor_eval(m, num, den, minus_d1);
}

}  // namespace twotors::curves
