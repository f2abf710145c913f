#pragma once

#include <vector>

#include "twotors/exact/polynomial.hpp"
#include "twotors/exact/square_class.hpp"

namespace twotors::curves {

/// y^2 = p(x) with p a squarefree cubic over Q, p = u * (monic part).
class EllipticModel {
 public:
  /// Throws InvalidArgument unless deg p = 3, NotSquarefree if disc(p) = 0.
  explicit EllipticModel(Poly p);

  const Poly& poly() const { return p_; }
  const Rational& lead() const { return u_; }
  Poly monic() const { return p_.monic(); }
  /// Rational Weierstrass roots, ascending.
  const std::vector<Rational>& rational_roots() const { return roots_; }
  /// Number of real roots (1 or 3), from the sign of the discriminant.
  int real_root_count() const;

 private:
  Poly p_;
  Rational u_;
  std::vector<Rational> roots_;
};

/// q_2 of the 2-torsion point (z, 0): class of p'(z) / u. Throws NotARoot.
SquareClass elliptic_q2(const EllipticModel& m, const Rational& z);

/// b_2((z_i,0), lambda((z_j,0))) = class of u (z_i - z_j). Throws NotARoot, EqualRoots.
SquareClass elliptic_b2_offdiag(const EllipticModel& m, const Rational& zi, const Rational& zj);

/// b_2 on any pair of rational roots; the diagonal is q_2.
SquareClass elliptic_b2(const EllipticModel& m, const Rational& zi, const Rational& zj);

/// 1 + sum over real roots of real_sign(q_2). Throws IrrationalRealRoot.
long elliptic_signed_count(const EllipticModel& m);

}  // namespace twotors::curves
