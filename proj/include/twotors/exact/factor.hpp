#pragma once

#include <map>

#include "twotors/exact/rational.hpp"

namespace twotors {

/// Prime factorization of |n| (n != 0): prime -> exponent.
/// Trial division up to 10^6, then Miller-Rabin plus Pollard rho (Brent).
std::map<Integer, unsigned> factorize(const Integer& n);

bool is_probable_prime(const Integer& n);

}  // namespace twotors
