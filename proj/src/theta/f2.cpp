#include "twotors/theta/f2.hpp"

#include <algorithm>
#include <bit>

#include "twotors/error.hpp"

namespace twotors::theta {
namespace {

int parity(Bits x) { return std::popcount(x) & 1; }

Bits low_mask(unsigned n) { return n >= 32 ? ~Bits{0} : ((Bits{1} << n) - 1); }

void check_dims(const F2Vector& v, const F2Vector& w) {
  if (v.g != w.g)
    throw MathError(ErrorKind::DimensionMismatch,
                    "genus " + std::to_string(v.g) + " vs " + std::to_string(w.g));
}

void check_vector(const RealCurveType& t, const F2Vector& v) {
  if (v.g != t.g) throw MathError(ErrorKind::DimensionMismatch, "vector genus differs from type genus");
}

}  // namespace

F2Vector operator+(const F2Vector& a, const F2Vector& b) {
  check_dims(a, b);
  return {a.g, a.upper ^ b.upper, a.lower ^ b.lower};
}

F2Vector F2Vector::parse(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos || bar != text.size() - bar - 1 || bar == 0 || bar > kMaxGenus)
    throw MathError(ErrorKind::InvalidArgument, "expected 'bits|bits' of equal length: " + text);
  F2Vector v;
  v.g = static_cast<unsigned>(bar);
  for (unsigned i = 0; i < v.g; ++i) {
    const char cu = text[i];
    const char cl = text[bar + 1 + i];
    if ((cu != '0' && cu != '1') || (cl != '0' && cl != '1'))
      throw MathError(ErrorKind::InvalidArgument, "non-binary digit in " + text);
    if (cu == '1') v.upper |= Bits{1} << i;
    if (cl == '1') v.lower |= Bits{1} << i;
  }
  return v;
}

std::string F2Vector::str() const {
  std::string out;
  for (unsigned i = 0; i < g; ++i) out += ((upper >> i) & 1) ? '1' : '0';
  out += '|';
  for (unsigned i = 0; i < g; ++i) out += ((lower >> i) & 1) ? '1' : '0';
  return out;
}

std::vector<F2Vector> all_vectors(unsigned g) {
  std::vector<F2Vector> out;
  out.reserve(std::size_t{1} << (2 * g));
  for (Bits u = 0; u < (Bits{1} << g); ++u)
    for (Bits l = 0; l < (Bits{1} << g); ++l) out.push_back({g, u, l});
  return out;
}

bool RealCurveType::valid() const {
  if (g < 1 || g > kMaxGenus || s > g || a > 1) return false;
  if (a == 1 && s == g) return false;
  if (a == 0 && (g - s) % 2 != 0) return false;
  return true;
}

void RealCurveType::validate() const {
  if (!valid()) throw MathError(ErrorKind::InvalidType, "invalid topological type " + str());
}

std::string RealCurveType::str() const {
  return "(" + std::to_string(g) + "," + std::to_string(s) + "," + std::to_string(a) + ")";
}

std::vector<RealCurveType> valid_types(unsigned max_genus) {
  std::vector<RealCurveType> out;
  for (unsigned g = 1; g <= max_genus; ++g)
    for (unsigned s = 0; s <= g; ++s)
      for (unsigned a = 0; a <= 1; ++a)
        if (RealCurveType t{g, s, a}; t.valid()) out.push_back(t);
  return out;
}

GaloisMatrix GaloisMatrix::of(const RealCurveType& t) {
  t.validate();
  GaloisMatrix h;
  h.rows.assign(t.g, 0);
  for (unsigned i = t.s; i < t.g; ++i) {
    if (t.a == 1) {
      h.rows[i] = Bits{1} << i;
    } else {
      const unsigned partner = t.s + ((i - t.s) ^ 1u);
      h.rows[i] = Bits{1} << partner;
    }
  }
  return h;
}

Bits GaloisMatrix::apply(Bits lower) const {
  Bits out = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (parity(rows[i] & lower)) out |= Bits{1} << i;
  return out;
}

unsigned GaloisMatrix::rank() const {
  // Gaussian elimination over Z_2 on the row masks.
  std::vector<Bits> r = rows;
  unsigned rk = 0;
  for (unsigned bit = 0; bit < 32; ++bit) {
    const Bits m = Bits{1} << bit;
    auto it = std::find_if(r.begin() + rk, r.end(), [m](Bits x) { return (x & m) != 0; });
    if (it == r.end()) continue;
    std::swap(*it, r[rk]);
    for (std::size_t i = 0; i < r.size(); ++i)
      if (i != rk && (r[i] & m)) r[i] ^= r[rk];
    ++rk;
  }
  return rk;
}

int symplectic(const F2Vector& v, const F2Vector& w) {
  check_dims(v, w);
  return parity((v.upper & w.lower) ^ (v.lower & w.upper));
}

int q0(const F2Vector& v) { return parity(v.upper & v.lower); }

int qc(const F2Vector& c, const F2Vector& v) { return q0(v) ^ symplectic(c, v); }

int arf(const F2Vector& c) { return q0(c); }

F2Vector sigma_apply(const RealCurveType& t, const F2Vector& v) {
  check_vector(t, v);
  const GaloisMatrix h = GaloisMatrix::of(t);
  return {v.g, v.upper ^ h.apply(v.lower), v.lower};
}

std::vector<F2Vector> real_points(const RealCurveType& t) {
  t.validate();
  std::vector<F2Vector> out;
  const Bits s_mask = low_mask(t.s);
  for (Bits u = 0; u < (Bits{1} << t.g); ++u)
    for (Bits l = 0; l <= s_mask; ++l) out.push_back({t.g, u, l});
  return out;
}

long signed_count(const RealCurveType& t) {
  long total = 0;
  for (const auto& v : real_points(t)) total += q0(v) ? -1 : 1;
  return total;
}

bool is_real_theta(const RealCurveType& t, const F2Vector& c) {
  t.validate();
  check_vector(t, c);
  const Bits tail = low_mask(t.g) & ~low_mask(t.s);
  return (c.lower & tail) == (t.a == 1 ? tail : Bits{0});
}

F2Vector conjugation_shift(const RealCurveType& t) {
  t.validate();
  F2Vector h{t.g, 0, 0};
  if (t.a == 1) h.upper = low_mask(t.g) & ~low_mask(t.s);
  return h;
}

ThetaCounts theta_counts(const RealCurveType& t, const OrientationParity& op) {
  t.validate();
  const Bits s_mask = low_mask(t.s);
  if ((op.u1 & ~s_mask) || (op.eps & ~s_mask))
    throw MathError(ErrorKind::DimensionMismatch, "orientation/parity longer than s");
  const Bits tau = t.a == 0 ? s_mask : Bits{0};
  const Bits want_lower = op.eps ^ tau;
  ThetaCounts counts;
  for (const auto& c : all_vectors(t.g)) {
    if (!is_real_theta(t, c)) continue;
    if ((c.upper & s_mask) != op.u1 || (c.lower & s_mask) != want_lower) continue;
    if (arf(c)) ++counts.odd;
    else ++counts.even;
  }
  return counts;
}

ThetaCounts theta_counts_closed_form(const RealCurveType& t, const OrientationParity& op) {
  t.validate();
  if (t.a == 1) {
    const long half = 1L << (t.g - t.s - 1);
    return {half, half};
  }
  const long total = 1L << (t.g - t.s);
  const int n = std::popcount(op.u1 & ~op.eps & low_mask(t.s));
  return n % 2 == 0 ? ThetaCounts{total, 0} : ThetaCounts{0, total};
}

long odd_theta_signed_sum(const RealCurveType& t, const F2Vector& nu) {
  if (!is_real_theta(t, nu))
    throw MathError(ErrorKind::NotRealTheta, nu.str() + " is not real for type " + t.str());
  if (t.a == 0 && (nu.upper & low_mask(t.s)) == 0)
    throw MathError(ErrorKind::ComplexSemiOrientation,
                    nu.str() + " induces the complex semi-orientation");
  long total = 0;
  for (const auto& b : real_points(t))
    if (arf(b + nu)) total += q0(b) ? -1 : 1;
  return total;
}

long lagrangian_odd_count(const RealCurveType& t, const F2Vector& c) {
  t.validate();
  check_vector(t, c);
  if (c.lower == 0) throw MathError(ErrorKind::ZeroLowerBlock, c.str() + " has c_l = 0");
  long count = 0;
  for (Bits u = 0; u < (Bits{1} << t.g); ++u)
    if (arf(F2Vector{t.g, u, 0} + c)) ++count;
  return count;
}

long totally_real_lower_bound(const RealCurveType& t) {
  t.validate();
  if (t.g > t.s + t.a + 1)
    throw MathError(ErrorKind::OutOfRegime, "g > s + a + 1 for type " + t.str());
  const unsigned n = t.s + 1, k = t.g - 1;
  if (k > n) return 0;
  long binom = 1;
  for (unsigned i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
  return binom * (1L << (t.g - 1));
}

long arf_odd_census(unsigned g) {
  long count = 0;
  for (const auto& c : all_vectors(g)) count += arf(c);
  return count;
}

}  // namespace twotors::theta
