#include "twotors/curves/hyperelliptic.hpp"

#include <algorithm>
#include <bit>

#include "twotors/error.hpp"

namespace twotors::curves {
namespace {

std::vector<std::size_t> indices_of(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

std::uint64_t full_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }

void check_model(const HyperellipticModel& m, const TwoTorsionClass& s) {
  if (s.root_count() != m.root_count())
    throw MathError(ErrorKind::ModelMismatch, "class does not belong to this model");
}

// prod_{z in S, w in W} (z - w)
Rational cross_product(const std::vector<Rational>& roots, std::uint64_t s, std::uint64_t w) {
  Rational acc(1);
  for (std::size_t i : indices_of(s))
    for (std::size_t j : indices_of(w)) acc *= roots[i] - roots[j];
  return acc;
}

int sign_of_product(const std::vector<Rational>& roots, std::uint64_t s, const Rational& x) {
  int sign = 1;
  for (std::size_t i : indices_of(s)) sign *= (x - roots[i]).sign();
  return sign;
}

}  // namespace

HyperellipticModel::HyperellipticModel(Rational lead, std::vector<Rational> roots)
    : lead_(std::move(lead)), roots_(std::move(roots)) {
  if (lead_.is_zero()) throw MathError(ErrorKind::InvalidArgument, "leading coefficient is zero");
  if (roots_.size() < 4 || roots_.size() % 2 != 0 || roots_.size() > 64)
    throw MathError(ErrorKind::InvalidArgument,
                    "need an even number of roots between 4 and 64, got " + std::to_string(roots_.size()));
  std::sort(roots_.begin(), roots_.end());
  if (std::adjacent_find(roots_.begin(), roots_.end()) != roots_.end())
    throw MathError(ErrorKind::EqualRoots, "Weierstrass roots must be distinct");
}

HyperellipticModel HyperellipticModel::from_poly(const Poly& p) {
  if (p.degree() < 4 || p.degree() % 2 != 0)
    throw MathError(ErrorKind::InvalidArgument, "need even degree >= 4: " + to_string(p));
  if (!is_squarefree(p)) throw MathError(ErrorKind::NotSquarefree, to_string(p));
  auto roots = rational_roots(p);
  if (static_cast<int>(roots.size()) != p.degree())
    throw MathError(ErrorKind::NotSplit, to_string(p) + " does not split over Q");
  return HyperellipticModel(p.leading(), std::move(roots));
}

Poly HyperellipticModel::polynomial() const {
  Poly p = Poly::constant(lead_);
  for (const auto& z : roots_) p = p * Poly::linear(z);
  return p;
}

TwoTorsionClass TwoTorsionClass::of(std::size_t root_count, std::uint64_t mask) {
  if (root_count < 2 || root_count > 64 || (mask & ~full_mask(root_count)) != 0)
    throw MathError(ErrorKind::InvalidArgument, "root index out of range");
  if (std::popcount(mask) % 2 != 0)
    throw MathError(ErrorKind::InvalidArgument, "2-torsion classes need an even subset");
  const std::uint64_t last = std::uint64_t{1} << (root_count - 1);
  if (mask & last) mask = ~mask & full_mask(root_count);
  return TwoTorsionClass(root_count, mask);
}

TwoTorsionClass TwoTorsionClass::of(std::size_t root_count, const std::vector<std::size_t>& indices) {
  std::uint64_t mask = 0;
  for (std::size_t i : indices) {
    if (i >= root_count || i >= 64) throw MathError(ErrorKind::InvalidArgument, "root index out of range");
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (mask & bit) throw MathError(ErrorKind::InvalidArgument, "repeated root index");
    mask |= bit;
  }
  return of(root_count, mask);
}

std::uint64_t TwoTorsionClass::complement_mask() const { return ~mask_ & full_mask(root_count_); }

std::vector<std::size_t> TwoTorsionClass::display_indices() const {
  const auto a = indices_of(mask_);
  const auto b = indices_of(complement_mask());
  if (a.size() != b.size()) return a.size() < b.size() ? a : b;
  return (mask_ & 1) ? a : b;
}

std::string TwoTorsionClass::label() const {
  if (is_identity()) return "0";
  std::string out = "a_{";
  const auto idx = display_indices();
  const bool wide = root_count_ > 10;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (wide && k > 0) out += ",";
    out += std::to_string(idx[k]);
  }
  return out + "}";
}

TwoTorsionClass operator+(const TwoTorsionClass& a, const TwoTorsionClass& b) {
  if (a.root_count_ != b.root_count_) throw MathError(ErrorKind::ModelMismatch, "classes from different models");
  return TwoTorsionClass::of(a.root_count_, a.mask_ ^ b.mask_);
}

std::vector<TwoTorsionClass> h_classes(const HyperellipticModel& m) {
  const std::size_t n = m.root_count();
  std::vector<TwoTorsionClass> out;
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < limit; ++mask)
    if (std::popcount(mask) % 2 == 0) out.push_back(TwoTorsionClass::of(n, mask));
  std::stable_sort(out.begin(), out.end(), [](const TwoTorsionClass& x, const TwoTorsionClass& y) {
    const auto a = x.display_indices();
    const auto b = y.display_indices();
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

int e2(const TwoTorsionClass& s, const TwoTorsionClass& t) {
  if (s.root_count() != t.root_count()) throw MathError(ErrorKind::ModelMismatch, "classes from different models");
  return std::popcount(s.mask() & t.mask()) % 2 == 0 ? 1 : -1;
}

SquareClass q2(const HyperellipticModel& m, const TwoTorsionClass& s) {
  check_model(m, s);
  if (s.is_identity()) return SquareClass();
  return SquareClass::of(cross_product(m.roots(), s.mask(), s.complement_mask()));
}

SquareClass b2(const HyperellipticModel& m, const TwoTorsionClass& s, const TwoTorsionClass& t) {
  check_model(m, s);
  check_model(m, t);
  if (e2(s, t) != 1)
    throw MathError(ErrorKind::OddIntersection,
                    s.label() + " and " + t.label() + " meet in an odd number of roots");
  const auto& roots = m.roots();
  const std::uint64_t smask = s.mask();
  Rational acc(1);
  const auto take_pairs = [&](std::uint64_t part, bool inside) {
    const auto idx = indices_of(part);
    for (std::size_t k = 0; k + 1 < idx.size(); k += 2) {
      const std::uint64_t pair = (std::uint64_t{1} << idx[k]) | (std::uint64_t{1} << idx[k + 1]);
      if (inside) {
        acc *= cross_product(roots, pair, ~pair & full_mask(roots.size()));
        acc *= cross_product(roots, smask & ~pair, pair);
      } else {
        acc *= cross_product(roots, smask, pair);
      }
    }
  };
  take_pairs(t.mask() & smask, true);
  take_pairs(t.mask() & ~smask, false);
  return SquareClass::of(acc);
}

ComponentDecomposition components(const HyperellipticModel& m) {
  const auto& r = m.roots();
  const std::size_t n = r.size();
  const Rational two(2);
  ComponentDecomposition d;
  if (m.lead().sign() > 0) {
    d.components.push_back({{Interval{std::nullopt, r[0]}, Interval{r[n - 1], std::nullopt}},
                            {0, n - 1},
                            r[0] - Rational(1)});
    for (std::size_t i = 1; i + 1 < n; i += 2)
      d.components.push_back({{Interval{r[i], r[i + 1]}}, {i, i + 1}, (r[i] + r[i + 1]) / two});
  } else {
    for (std::size_t i = 0; i + 1 < n; i += 2)
      d.components.push_back({{Interval{r[i], r[i + 1]}}, {i, i + 1}, (r[i] + r[i + 1]) / two});
  }
  return d;
}

std::vector<int> par_vec(const HyperellipticModel& m, const TwoTorsionClass& s) {
  check_model(m, s);
  const auto d = components(m);
  std::vector<int> out;
  for (std::size_t i = 1; i < d.components.size(); ++i) {
    int p = 0;
    for (std::size_t idx : d.components[i].root_indices) p ^= static_cast<int>((s.mask() >> idx) & 1);
    out.push_back(p);
  }
  return out;
}

std::vector<int> sg_vec(const HyperellipticModel& m, const TwoTorsionClass& s) {
  check_model(m, s);
  const auto d = components(m);
  const int base = sign_of_product(m.roots(), s.mask(), d.components[0].sample);
  std::vector<int> out;
  for (std::size_t i = 1; i < d.components.size(); ++i)
    out.push_back(sign_of_product(m.roots(), s.mask(), d.components[i].sample) == base ? 0 : 1);
  return out;
}

int b2_real_sign(const HyperellipticModel& m, const TwoTorsionClass& s, const TwoTorsionClass& t) {
  const auto par = par_vec(m, s);
  const auto sg = sg_vec(m, t);
  int acc = 0;
  for (std::size_t i = 0; i < par.size(); ++i) acc ^= par[i] & sg[i];
  return acc ? -1 : 1;
}

long signed_count(const HyperellipticModel& m) {
  long total = 0;
  for (const auto& c : h_classes(m)) total += real_sign(q2(m, c));
  return total;
}

SquareClass q2_product(const HyperellipticModel& m) {
  SquareClass acc;
  for (const auto& c : h_classes(m)) acc = acc * q2(m, c);
  return acc;
}

}  // namespace twotors::curves
