#pragma once

#include <cstddef>
#include <map>
#include <variant>
#include <vector>

#include "twotors/curves/hyperelliptic.hpp"
#include "twotors/exact/polynomial.hpp"

namespace twotors::curves {

/// The two points at infinity of an even-degree model, taken together.
struct InfinityPair {
  friend auto operator<=>(const InfinityPair&, const InfinityPair&) = default;
};

/// A Weierstrass point P_i = (z_i, 0), by root index.
struct WeierstrassPoint {
  std::size_t index = 0;
  friend auto operator<=>(const WeierstrassPoint&, const WeierstrassPoint&) = default;
};

using DivisorPoint = std::variant<WeierstrassPoint, InfinityPair>;

/// Formal sum of points with integer multiplicities.
using Divisor = std::map<DivisorPoint, long>;

/// g(D) = prod g(P)^{n_P} for g = num/den a function of x alone. Each point
/// of the infinity pair takes the value lc(num)/lc(den), so it needs
/// deg num = deg den. Throws SupportCollision when D meets div(g).
Rational divisor_eval(const HyperellipticModel& m, const Poly& num, const Poly& den, const Divisor& d);

/// prod (x - z_i)^{m_i} over root indices, with sum m_i = 0.
struct XRatio {
  std::map<std::size_t, long> exponents;

  Poly numerator(const HyperellipticModel& m) const;
  Poly denominator(const HyperellipticModel& m) const;
  /// div(x - z_i) = 2 P_i - (infinity pair), so div = sum 2 m_i P_i - (sum m_i) infinity.
  Divisor divisor() const;
};

/// f(div g) == g(div f) exactly. Throws SharedSupport if the root sets meet,
/// InvalidArgument if either ratio is not of degree 0.
bool weil_reciprocity_check(const HyperellipticModel& m, const XRatio& f, const XRatio& g);

/// The two sides of the reciprocity law, for reporting.
std::pair<Rational, Rational> weil_reciprocity_sides(const HyperellipticModel& m, const XRatio& f,
                                                     const XRatio& g);

/// Independent route to q_2: evaluates f = prod_{z in S}(x - z) / (x - c)^{|S|}
/// (div f = 2 D_S) on minus the complement representative
/// sum_{w in S^c} P_w - (|S^c|/2) infinity. c must not be a root.
Rational q2_by_divisor(const HyperellipticModel& m, const TwoTorsionClass& s, const Rational& c);

}  // namespace twotors::curves
