#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "twotors/error.hpp"
#include "twotors/exact/polynomial.hpp"
#include "twotors/exact/square_class.hpp"
#include "twotors/exact/symbols.hpp"

namespace twotors::gw {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Symmetric Gram matrix of a bilinear form over Q.
using GramMatrix = Matrix<Rational>;

/// A diagonal form <a1,...,an> over Q, kept as a sorted multiset.
/// The empty multiset is the zero form.
class GWElement {
 public:
  GWElement() = default;
  GWElement(std::initializer_list<SquareClass> entries);
  explicit GWElement(std::vector<SquareClass> entries);

  /// <a> for a nonzero rational.
  static GWElement unit(const Rational& a) { return GWElement({SquareClass::of(a)}); }
  /// count copies of <a>.
  static GWElement multiple(std::size_t count, const SquareClass& a);

  const std::vector<SquareClass>& entries() const { return entries_; }
  std::size_t rank() const { return entries_.size(); }

  /// "k1*<1> + k2*<-1> + <a3> + ..." with equal entries aggregated.
  std::string str() const;

  friend bool operator==(const GWElement&, const GWElement&) = default;

 private:
  std::vector<SquareClass> entries_;
};

/// Orthogonal sum (multiset union).
GWElement gw_sum(const GWElement& a, const GWElement& b);
inline GWElement operator+(const GWElement& a, const GWElement& b) { return gw_sum(a, b); }

struct FormInvariants {
  std::size_t rank = 0;
  long signature = 0;
  SquareClass discriminant;
  /// Hasse invariant prod_{i<j} (a_i,a_j)_v on the real place, 2, and every
  /// prime dividing an entry. Places not listed carry +1.
  std::map<Place, int> hasse;

  int hasse_at(const Place& v) const;
};

FormInvariants invariants(const GWElement& e);

/// Complete isometry test over Q: rank, signature, discriminant and
/// Hasse invariants at every place.
bool is_isometric(const GWElement& a, const GWElement& b);

enum class PivotStrategy {
  FirstNonzero,  ///< first nonzero diagonal entry in the trailing block
  LastNonzero,   ///< last nonzero diagonal entry in the trailing block
};

/// Symmetric congruence elimination. Returns the diagonal of a matrix
/// congruent to g. A zero pivot with a nonzero coupling (i, j) is repaired
/// by adding row/column j to i. Throws MathError(SingularGram).
template <typename Derived>
std::vector<typename Derived::Scalar> congruence_diagonal(
    const Eigen::MatrixBase<Derived>& g, PivotStrategy strategy = PivotStrategy::FirstNonzero) {
  using Scalar = typename Derived::Scalar;
  if (g.rows() != g.cols()) throw MathError(ErrorKind::DimensionMismatch, "Gram matrix not square");
  Matrix<Scalar> a = g;
  const Eigen::Index n = a.rows();
  const Scalar zero(0);
  std::vector<Scalar> diag;
  diag.reserve(static_cast<std::size_t>(n));

  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = k; i < n; ++i) {
      if (a(i, i) != zero) {
        pivot = i;
        if (strategy == PivotStrategy::FirstNonzero) break;
      }
    }
    if (pivot < 0) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = k; i < n && pi < 0; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
          if (a(i, j) != zero) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) throw MathError(ErrorKind::SingularGram, "Gram matrix is singular");
      // New a(pi,pi) = a(pi,pi) + 2 a(pi,pj) + a(pj,pj) = 2 a(pi,pj) != 0.
      a.row(pi) += a.row(pj);
      a.col(pi) += a.col(pj);
      pivot = pi;
    }
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      a.col(k).swap(a.col(pivot));
    }
    const Scalar p = a(k, k);
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (a(r, k) == zero) continue;
      const Scalar f = a(r, k) / p;
      a.row(r) -= f * a.row(k);
      a.col(r) -= f * a.col(k);
    }
    diag.push_back(p);
  }
  return diag;
}

/// Congruence diagonalization as an element of GW(Q).
GWElement diagonalize(const GramMatrix& g, PivotStrategy strategy = PivotStrategy::FirstNonzero);

/// Power sums tr(x^k), k = 0..count-1, of the roots of p (Newton's identities).
std::vector<Rational> power_sums(const Poly& p, std::size_t count);

/// Gram matrix of (f, g) -> tr_{Q[x]/(q)}(alpha f g) on the power basis.
GramMatrix trace_gram(const Poly& q, const Poly& alpha);

/// Form f -> tr(f^2 / p') on Q[x]/(p). Throws NotSquarefree.
GWElement trace_form_weighted(const Poly& p);

/// Transfer (f, g) -> tr(alpha f g) on Q[x]/(q). Throws NotSquarefree, NotInvertible.
GWElement scaled_trace_transfer(const Poly& q, const Poly& alpha);

/// 2^{g-1}(2^g+1) <1> + 2^{g-1}(2^g-1) <-1>.
GWElement conjecture_rhs(unsigned genus);

}  // namespace twotors::gw
