#include "krull/counterexample.hpp"

#include <algorithm>

#include "krull/errors.hpp"

namespace krull {

CounterexampleInstance build_counterexample_instance() {
  CounterexampleInstance s{make_block_monoid(std::vector<long>{-2, -1, 1, 2}), {}, {}};
  s.alpha1 = IntVec(4, Int(2));
  s.alpha2 = s.alpha1 + s.alpha1;
  return s;
}

CounterexampleReport verify_counterexample(long bound, const std::optional<IntVec>& alpha1) {
  if (bound < 0) throw PreconditionError("bound-nonnegative", "bound must be >= 0");
  CounterexampleInstance s = build_counterexample_instance();
  if (alpha1) {
    if (!s.monoid.contains(*alpha1)) throw PreconditionError("alpha-in-monoid", "alpha_1 is not a zero-sum sequence");
    s.alpha1 = *alpha1;
    s.alpha2 = s.alpha1 + s.alpha1;
  }
  CounterexampleReport r;
  r.bound = bound;
  r.alpha1 = s.alpha1;
  r.alpha2 = s.alpha2;
  r.identity_holds = s.alpha2 - s.alpha1 == s.alpha1;
  r.symbolic_min = *std::min_element(s.alpha1.begin(), s.alpha1.end());
  r.search = valuation_witness_search(s.monoid, s.alpha1, zero_vec(4), bound);
  r.class_group = class_group_s(s.monoid);
  if (r.search.witness)
    r.statement = "witness found: a = " + to_string(*r.search.witness) + " gives valuation " +
                  r.search.min_valuation.get_str() + " at prime " + std::to_string(*r.search.witness_prime);
  else
    r.statement = "no witness; minimum over all tested (a,i) = " + r.search.min_valuation.get_str();
  return r;
}

}  // namespace krull
