#pragma once

// The block monoid over {-2,-1,1,2} with alpha_1 = (2,2,2,2) and
// alpha_2 = 2 alpha_1: for every a in the monoid, alpha_2 + a - alpha_1 has
// valuation at least 2 at every prime divisor, so no a can bring some
// valuation down to 1.

#include <optional>
#include <string>
#include <vector>

#include "krull/krull_monoid.hpp"

namespace krull {

struct CounterexampleInstance {
  BlockMonoid monoid;
  IntVec alpha1;  // divisor vectors
  IntVec alpha2;
};

CounterexampleInstance build_counterexample_instance();

struct CounterexampleReport {
  long bound = 0;
  IntVec alpha1, alpha2;
  // alpha_2 - alpha_1 == alpha_1, so v_i(alpha_2 + a - alpha_1) = v_i(alpha_1) + v_i(a)
  bool identity_holds = false;
  Int symbolic_min;  // min_i v_i(alpha_1), the lower bound the identity gives
  WitnessReport search;
  ClassGroupDesc class_group;
  std::string statement;
};

// `alpha1` replaces (2,2,2,2) for negative controls; alpha_2 stays 2 alpha_1.
CounterexampleReport verify_counterexample(long bound, const std::optional<IntVec>& alpha1 = std::nullopt);

}  // namespace krull
