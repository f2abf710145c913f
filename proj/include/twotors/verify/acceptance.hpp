#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "twotors/cli/render.hpp"
#include "twotors/curves/hyperelliptic.hpp"

namespace twotors::verify {

using Q2Fn = std::function<SquareClass(const curves::HyperellipticModel&, const curves::TwoTorsionClass&)>;

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  /// q_2 implementation under test; defaults to curves::q2.
  Q2Fn q2;
};

/// Outcome of one numbered acceptance criterion. `checks` holds the
/// individual assertions; Reported entries never fail the criterion.
struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<cli::Check> checks;

  bool passed() const;
  std::string summary() const;
};

/// Runs acceptance criteria 1-10 (criterion 10 covers the in-process parts:
/// parse round-trip and byte-stable JSON rendering).
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// q_2 with the sign of one nontrivial class flipped, for fault-injection tests.
Q2Fn flipped_q2_sign();

}  // namespace twotors::verify
