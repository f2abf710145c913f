#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twotors/exact/polynomial.hpp"
#include "twotors/exact/square_class.hpp"

namespace twotors::curves {

/// Split even-degree model y^2 = u * prod (x - z_i) with 2g+2 distinct
/// rational roots, stored ascending.
class HyperellipticModel {
 public:
  /// Throws EqualRoots on repeated roots, InvalidArgument on a bad count
  /// (needs an even number >= 4, at most 64) or u = 0.
  HyperellipticModel(Rational lead, std::vector<Rational> roots);

  /// Accepts any polynomial splitting over Q into distinct linear factors
  /// of even degree >= 4. Throws NotSplit / NotSquarefree.
  static HyperellipticModel from_poly(const Poly& p);

  const Rational& lead() const { return lead_; }
  const std::vector<Rational>& roots() const { return roots_; }
  std::size_t root_count() const { return roots_.size(); }
  unsigned genus() const { return static_cast<unsigned>(roots_.size() / 2 - 1); }
  Poly polynomial() const;

  friend bool operator==(const HyperellipticModel&, const HyperellipticModel&) = default;

 private:
  Rational lead_;
  std::vector<Rational> roots_;
};

/// 2-torsion class a_S for an even subset S of root indices, taken modulo
/// complement. Canonical storage: the representative not containing the
/// last root index (the smaller bitmask).
class TwoTorsionClass {
 public:
  /// Throws InvalidArgument for odd |S| or out-of-range indices.
  static TwoTorsionClass of(std::size_t root_count, std::uint64_t mask);
  static TwoTorsionClass of(std::size_t root_count, const std::vector<std::size_t>& indices);
  static TwoTorsionClass identity(std::size_t root_count) { return of(root_count, 0); }

  std::size_t root_count() const { return root_count_; }
  std::uint64_t mask() const { return mask_; }
  std::uint64_t complement_mask() const;
  bool is_identity() const { return mask_ == 0; }

  /// Representative used for naming: the smaller of S and S^c, ties broken
  /// toward the one containing index 0.
  std::vector<std::size_t> display_indices() const;
  /// e.g. "a_{01}", "a_{0123}", "0" for the identity.
  std::string label() const;

  /// Sum in J[2]: symmetric difference.
  friend TwoTorsionClass operator+(const TwoTorsionClass& a, const TwoTorsionClass& b);
  friend bool operator==(const TwoTorsionClass&, const TwoTorsionClass&) = default;

 private:
  TwoTorsionClass(std::size_t n, std::uint64_t mask) : root_count_(n), mask_(mask) {}
  std::size_t root_count_ = 0;
  std::uint64_t mask_ = 0;
};

/// All 2^{2g} classes, ordered by (display size, display indices).
std::vector<TwoTorsionClass> h_classes(const HyperellipticModel& m);

/// Weil pairing (-1)^{|S cap T|}. Throws ModelMismatch.
int e2(const TwoTorsionClass& s, const TwoTorsionClass& t);

/// q_2(a_S) = class of prod_{z in S, w in S^c} (z - w).
SquareClass q2(const HyperellipticModel& m, const TwoTorsionClass& s);

/// b_2(a_S, lambda(a_T)) for |S cap T| even. Throws OddIntersection.
SquareClass b2(const HyperellipticModel& m, const TwoTorsionClass& s, const TwoTorsionClass& t);

struct Interval {
  std::optional<Rational> lo;  ///< nullopt = -infinity
  std::optional<Rational> hi;  ///< nullopt = +infinity
};

struct RealComponent {
  std::vector<Interval> intervals;
  std::vector<std::size_t> root_indices;
  Rational sample;  ///< exact x-coordinate of a real point on the component
};

/// Real components; index 0 is X_0, the component containing the smallest root.
struct ComponentDecomposition {
  std::vector<RealComponent> components;
  std::size_t s() const { return components.size() - 1; }
};

ComponentDecomposition components(const HyperellipticModel& m);

/// par_i(S) for i = 1..s (entry i-1 of the result).
std::vector<int> par_vec(const HyperellipticModel& m, const TwoTorsionClass& s);
/// sg_i(S) for i = 1..s, with f_S normalized nonnegative on X_0.
std::vector<int> sg_vec(const HyperellipticModel& m, const TwoTorsionClass& s);

/// (-1)^{sum_i par_i(S) sg_i(T)}; defined for every pair.
int b2_real_sign(const HyperellipticModel& m, const TwoTorsionClass& s, const TwoTorsionClass& t);

/// sum over all classes of real_sign(q2); equals 2^g.
long signed_count(const HyperellipticModel& m);

/// prod over all classes of q2; -1 for g = 1 and +1 for g >= 2.
SquareClass q2_product(const HyperellipticModel& m);

}  // namespace twotors::curves
