#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace twotors::theta {

inline constexpr unsigned kMaxGenus = 16;

using Bits = std::uint32_t;

/// Vector (c_u | c_l) in Z_2^{2g}. Bit i of each block is coordinate i+1.
struct F2Vector {
  unsigned g = 1;
  Bits upper = 0;
  Bits lower = 0;

  /// Parses "10|01" (c_u | c_l, coordinate 1 first).
  static F2Vector parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const F2Vector&, const F2Vector&) = default;
  friend F2Vector operator+(const F2Vector& a, const F2Vector& b);
};

/// All 2^{2g} vectors in a fixed order (upper-major).
std::vector<F2Vector> all_vectors(unsigned g);

/// Topological type (g, s, a): s+1 real components, a = a(X).
/// Valid iff 1 <= g <= kMaxGenus, s <= g, a = 1 forces s < g, a = 0 forces g - s even.
struct RealCurveType {
  unsigned g = 1;
  unsigned s = 0;
  unsigned a = 1;

  bool valid() const;
  /// Throws MathError(InvalidType).
  void validate() const;
  std::string str() const;
};

/// Every valid type of genus 1..max_genus.
std::vector<RealCurveType> valid_types(unsigned max_genus);

/// Off-diagonal block H of the conjugation matrix [[I, H], [0, I]], as g row masks.
struct GaloisMatrix {
  std::vector<Bits> rows;

  static GaloisMatrix of(const RealCurveType& t);
  Bits apply(Bits lower) const;
  unsigned rank() const;
};

/// Offsets of a (semi-orientation, parity) pair from the reference data,
/// restricted to the first s coordinates.
struct OrientationParity {
  Bits u1 = 0;
  Bits eps = 0;
};

int symplectic(const F2Vector& v, const F2Vector& w);
int q0(const F2Vector& v);
/// q_c(v) = q0(v) + <c, v>.
int qc(const F2Vector& c, const F2Vector& v);
/// arf(q_c) = q0(c).
int arf(const F2Vector& c);

F2Vector sigma_apply(const RealCurveType& t, const F2Vector& v);

/// Fixed vectors of conjugation: c_l supported in the first s coordinates.
std::vector<F2Vector> real_points(const RealCurveType& t);

/// sum over real points of (-1)^{q0}; equals 2^g.
long signed_count(const RealCurveType& t);

/// c + eta_0 is real iff entries s+1..g of c_l all equal a.
bool is_real_theta(const RealCurveType& t, const F2Vector& c);

/// h of q0 o sigma = q_h: sum of v_{s+1..g} when a = 1, zero when a = 0.
F2Vector conjugation_shift(const RealCurveType& t);

struct ThetaCounts {
  long even = 0;
  long odd = 0;
  friend bool operator==(const ThetaCounts&, const ThetaCounts&) = default;
};

/// Brute-force count of real theta characteristics with prescribed
/// orientation/parity offsets, split by Arf invariant. For a = 0 the
/// reference parity is (1,...,1), so the c_l block is eps + (1,...,1).
ThetaCounts theta_counts(const RealCurveType& t, const OrientationParity& op);

/// Closed form: a = 1 gives 2^{g-s-1} each; a = 0 gives 2^{g-s} of the
/// parity of n = #{i : u1_i = 1, eps_i = 0}.
ThetaCounts theta_counts_closed_form(const RealCurveType& t, const OrientationParity& op);

/// sum over real b with arf(q_{b+nu}) = 1 of (-1)^{q0(b)}.
/// Throws NotRealTheta, or ComplexSemiOrientation when a = 0 and the
/// orientation block of nu vanishes.
long odd_theta_signed_sum(const RealCurveType& t, const F2Vector& nu);

/// #{a : a_l = 0, arf(q_{a+c}) = 1}. Throws ZeroLowerBlock if c_l = 0.
long lagrangian_odd_count(const RealCurveType& t, const F2Vector& c);

/// binom(s+1, g-1) * 2^{g-1}. Throws OutOfRegime if g > s + a + 1.
long totally_real_lower_bound(const RealCurveType& t);

/// #{c : arf(c) = 1} by enumeration.
long arf_odd_census(unsigned g);

}  // namespace twotors::theta
