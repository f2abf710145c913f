#include "twotors/curves/elliptic.hpp"

#include "twotors/error.hpp"

namespace twotors::curves {
namespace {

void require_root(const EllipticModel& m, const Rational& z) {
  if (!m.poly()(z).is_zero())
    throw MathError(ErrorKind::NotARoot, z.str() + " is not a root of " + to_string(m.poly()));
}

}  // namespace

EllipticModel::EllipticModel(Poly p) : p_(std::move(p)) {
  if (p_.degree() != 3)
    throw MathError(ErrorKind::InvalidArgument, "elliptic model needs a cubic, got " + to_string(p_));
  if (discriminant(p_).is_zero()) throw MathError(ErrorKind::NotSquarefree, to_string(p_));
  u_ = p_.leading();
  roots_ = twotors::rational_roots(p_);
}

int EllipticModel::real_root_count() const { return discriminant(p_).sign() > 0 ? 3 : 1; }

SquareClass elliptic_q2(const EllipticModel& m, const Rational& z) {
  require_root(m, z);
  return SquareClass::of(m.poly().derivative()(z) / m.lead());
}

SquareClass elliptic_b2_offdiag(const EllipticModel& m, const Rational& zi, const Rational& zj) {
  require_root(m, zi);
  require_root(m, zj);
  if (zi == zj) throw MathError(ErrorKind::EqualRoots, "off-diagonal pairing needs distinct roots");
  return SquareClass::of(m.lead() * (zi - zj));
}

SquareClass elliptic_b2(const EllipticModel& m, const Rational& zi, const Rational& zj) {
  return zi == zj ? elliptic_q2(m, zi) : elliptic_b2_offdiag(m, zi, zj);
}

long elliptic_signed_count(const EllipticModel& m) {
  if (static_cast<int>(m.rational_roots().size()) != m.real_root_count())
    throw MathError(ErrorKind::IrrationalRealRoot,
                    to_string(m.poly()) + " has a real root that is not rational");
  long total = 1;
  for (const auto& z : m.rational_roots()) total += real_sign(elliptic_q2(m, z));
  return total;
}

}  // namespace twotors::curves
