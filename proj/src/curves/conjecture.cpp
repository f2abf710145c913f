#include "twotors/curves/conjecture.hpp"

namespace twotors::curves {

gw::GWElement conjecture_lhs_elliptic(const EllipticModel& m) {
  return gw::gw_sum(gw::GWElement{SquareClass()}, gw::trace_form_weighted(m.monic()));
}

gw::GWElement conjecture_lhs_split(const HyperellipticModel& m) {
  std::vector<SquareClass> entries;
  for (const auto& c : h_classes(m)) entries.push_back(q2(m, c));
  return gw::GWElement(std::move(entries));
}

}  // namespace twotors::curves
