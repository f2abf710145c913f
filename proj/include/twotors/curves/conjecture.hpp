#pragma once

#include "twotors/curves/elliptic.hpp"
#include "twotors/curves/hyperelliptic.hpp"
#include "twotors/gw/forms.hpp"

namespace twotors::curves {

/// <1> + tr_{Q[x]/(p)}(f^2 / p'), with p replaced by its monic part so
/// the weights are the q_2 values of the model.
gw::GWElement conjecture_lhs_elliptic(const EllipticModel& m);

/// sum over all 2^{2g} classes of <q_2(S)>; every residue field is Q.
gw::GWElement conjecture_lhs_split(const HyperellipticModel& m);

}  // namespace twotors::curves
