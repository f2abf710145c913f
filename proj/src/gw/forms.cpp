#include "twotors/gw/forms.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace twotors::gw {

GWElement::GWElement(std::initializer_list<SquareClass> entries) : entries_(entries) {
  std::sort(entries_.begin(), entries_.end());
}

GWElement::GWElement(std::vector<SquareClass> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
}

GWElement GWElement::multiple(std::size_t count, const SquareClass& a) {
  return GWElement(std::vector<SquareClass>(count, a));
}

std::string GWElement::str() const {
  if (entries_.empty()) return "0";
  // Aggregate <1> and <-1> first, then the remaining classes in order.
  std::map<SquareClass, std::size_t> counts;
  for (const auto& e : entries_) ++counts[e];
  std::vector<std::pair<SquareClass, std::size_t>> ordered;
  const SquareClass one;
  const SquareClass minus = SquareClass::minus_one();
  if (auto it = counts.find(one); it != counts.end()) ordered.push_back(*it);
  if (auto it = counts.find(minus); it != counts.end()) ordered.push_back(*it);
  for (const auto& kv : counts)
    if (kv.first != one && kv.first != minus) ordered.push_back(kv);
  std::ostringstream os;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (i > 0) os << " + ";
    if (ordered[i].second > 1) os << ordered[i].second << "*";
    os << "<" << ordered[i].first << ">";
  }
  return os.str();
}

GWElement gw_sum(const GWElement& a, const GWElement& b) {
  std::vector<SquareClass> all = a.entries();
  all.insert(all.end(), b.entries().begin(), b.entries().end());
  return GWElement(std::move(all));
}

int FormInvariants::hasse_at(const Place& v) const {
  const auto it = hasse.find(v);
  return it == hasse.end() ? 1 : it->second;
}

namespace {

std::set<Place> relevant_places(const GWElement& e) {
  std::set<Place> places{Place::real(), Place::finite(2)};
  for (const auto& a : e.entries())
    for (const auto& p : a.primes()) places.insert(Place::finite(p));
  return places;
}

int hasse_invariant(const GWElement& e, const Place& v) {
  // Entries are sorted, so equal classes form runs; a pair of runs with
  // multiplicities m, n contributes (a,b)^{mn}, a single run (a,a)^{m(m-1)/2}.
  std::vector<std::pair<SquareClass, std::size_t>> runs;
  for (const auto& a : e.entries()) {
    if (!runs.empty() && runs.back().first == a) ++runs.back().second;
    else runs.emplace_back(a, 1);
  }
  int h = 1;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& [a, m] = runs[i];
    if ((m * (m - 1) / 2) % 2 == 1) h *= hilbert_symbol(a, a, v);
    for (std::size_t j = i + 1; j < runs.size(); ++j)
      if ((m * runs[j].second) % 2 == 1) h *= hilbert_symbol(a, runs[j].first, v);
  }
  return h;
}

}  // namespace

FormInvariants invariants(const GWElement& e) {
  FormInvariants inv;
  inv.rank = e.rank();
  for (const auto& a : e.entries()) {
    inv.signature += real_sign(a);
    inv.discriminant = inv.discriminant * a;
  }
  for (const auto& v : relevant_places(e)) inv.hasse[v] = hasse_invariant(e, v);
  return inv;
}

bool is_isometric(const GWElement& a, const GWElement& b) {
  const FormInvariants ia = invariants(a);
  const FormInvariants ib = invariants(b);
  if (ia.rank != ib.rank || ia.signature != ib.signature || ia.discriminant != ib.discriminant)
    return false;
  std::set<Place> places;
  for (const auto& kv : ia.hasse) places.insert(kv.first);
  for (const auto& kv : ib.hasse) places.insert(kv.first);
  return std::all_of(places.begin(), places.end(),
                     [&](const Place& v) { return ia.hasse_at(v) == ib.hasse_at(v); });
}

GWElement diagonalize(const GramMatrix& g, PivotStrategy strategy) {
  std::vector<SquareClass> entries;
  for (const auto& d : congruence_diagonal(g, strategy)) entries.push_back(SquareClass::of(d));
  return GWElement(std::move(entries));
}

GWElement conjecture_rhs(unsigned genus) {
  if (genus < 1) throw MathError(ErrorKind::InvalidArgument, "genus must be >= 1");
  const std::size_t half = std::size_t{1} << (genus - 1);
  const std::size_t two_g = std::size_t{1} << genus;
  return gw_sum(GWElement::multiple(half * (two_g + 1), SquareClass()),
                GWElement::multiple(half * (two_g - 1), SquareClass::minus_one()));
}

}  // namespace twotors::gw
