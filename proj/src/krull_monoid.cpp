#include "krull/krull_monoid.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "krull/errors.hpp"

namespace krull {

BlockMonoid::BlockMonoid(std::vector<IntVec> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw PreconditionError("nonempty-weights", "G0 must be nonempty");
  d_ = weights_.front().size();
  if (d_ == 0) throw PreconditionError("nonempty-weights", "weights must have positive length");
  std::set<IntVec> seen;
  for (const auto& w : weights_) {
    if (w.size() != d_) throw PreconditionError("weight-dimension", "weights of differing length");
    if (is_zero(w)) throw PreconditionError("nonzero-weights", "zero weight " + to_string(w));
    if (!seen.insert(w).second) throw PreconditionError("distinct-weights", "duplicate weight " + to_string(w));
  }
  W_ = IntMat::from_columns(weights_, d_);
  K_ = kernel_basis(W_);
}

bool BlockMonoid::is_zero_sum(const IntVec& e) const {
  return e.size() == num_primes() && is_zero(W_.apply(e));
}

bool BlockMonoid::contains(const IntVec& e) const {
  if (!is_zero_sum(e)) return false;
  return std::all_of(e.begin(), e.end(), [](const Int& x) { return x >= 0; });
}

IntVec BlockMonoid::divisor(const IntVec& coords) const {
  if (coords.size() != lattice_rank()) throw Error("BlockMonoid::divisor: wrong coordinate length");
  return K_.apply(coords);
}

IntVec BlockMonoid::coordinates(const IntVec& e) const {
  if (!is_zero_sum(e)) throw PreconditionError("zero-sum", to_string(e) + " is not a zero-sum vector");
  auto c = lattice_coordinates(K_, e);
  if (!c) throw Error("BlockMonoid::coordinates: kernel basis is not saturated");
  return *c;
}

BlockMonoid make_block_monoid(const std::vector<IntVec>& weights) { return BlockMonoid(weights); }

BlockMonoid make_block_monoid(const std::vector<long>& weights) {
  std::vector<IntVec> cols;
  for (long w : weights) cols.push_back(IntVec{Int(w)});
  return BlockMonoid(std::move(cols));
}

namespace {

// Calls fn on every vector in N_0^r with entries summing to `total`,
// lexicographically descending. fn returns false to stop.
bool for_each_composition(std::size_t r, long total, const std::function<bool(const IntVec&)>& fn) {
  IntVec cur(r, Int(0));
  std::function<bool(std::size_t, long)> rec = [&](std::size_t i, long left) -> bool {
    if (i + 1 == r) {
      cur[i] = left;
      return fn(cur);
    }
    for (long x = left; x >= 0; --x) {
      cur[i] = x;
      if (!rec(i + 1, left - x)) return false;
    }
    cur[i] = 0;
    return true;
  };
  if (r == 0) return total == 0 ? fn(cur) : true;
  return rec(0, total);
}

}  // namespace

std::vector<IntVec> enumerate_elements(const BlockMonoid& M, long bound) {
  std::vector<IntVec> out;
  for (long s = 0; s <= bound; ++s)
    for_each_composition(M.num_primes(), s, [&](const IntVec& e) {
      if (M.is_zero_sum(e)) out.push_back(e);
      return true;
    });
  return out;
}

std::vector<IntVec> enumerate_atoms(const BlockMonoid& M, long bound) {
  std::vector<IntVec> atoms;
  for (const auto& e : enumerate_elements(M, bound)) {
    if (is_zero(e)) continue;
    // every nonzero element dominates an atom of smaller or equal total
    const bool reducible = std::any_of(atoms.begin(), atoms.end(),
                                       [&](const IntVec& a) { return dominates(e, a); });
    if (!reducible) atoms.push_back(e);
  }
  return atoms;
}

std::string to_string(DivisorTheoryStatus s) {
  switch (s) {
    case DivisorTheoryStatus::DivisorTheory: return "divisor-theory";
    case DivisorTheoryStatus::NotDivisorTheory: return "not-divisor-theory";
    case DivisorTheoryStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

DivisorTheoryReport verify_divisor_theory(const BlockMonoid& M, long bound) {
  DivisorTheoryReport rep;
  rep.bound = bound;
  const std::size_t r = M.num_primes();
  rep.meets.assign(r, std::nullopt);
  for (const auto& e : enumerate_elements(M, bound))
    for (std::size_t i = 0; i < r; ++i) {
      if (e[i] <= 0) continue;
      rep.meets[i] = rep.meets[i] ? componentwise_min(*rep.meets[i], e) : e;
    }
  bool all_unit = true;
  for (std::size_t i = 0; i < r; ++i) {
    if (!rep.meets[i]) {
      rep.unreached.push_back(i);
    } else if (*rep.meets[i] != unit_vec(r, i)) {
      all_unit = false;
    }
  }
  if (!rep.unreached.empty()) {
    rep.status = DivisorTheoryStatus::Inconclusive;
    rep.note = "some coordinate is not reached by any element within the bound";
  } else if (all_unit) {
    rep.status = DivisorTheoryStatus::DivisorTheory;
  } else {
    rep.status = DivisorTheoryStatus::NotDivisorTheory;
    // distinct meets are the prime divisors the embedding actually sees
    std::set<IntVec> distinct;
    for (const auto& m : rep.meets) distinct.insert(*m);
    rep.note = "embedding into N_0^r is not a divisor theory; its meets give " +
               std::to_string(distinct.size()) + " prime divisor(s)";
    if (distinct.size() == 1 && M.lattice_rank() == 1) rep.note += "; the monoid is factorial";
  }
  return rep;
}

IntVec v_closure_s(const std::vector<IntVec>& gens) {
  if (gens.empty()) throw PreconditionError("nonempty", "v-closure of the empty set");
  IntVec t = gens.front();
  for (const auto& g : gens) {
    if (g.size() != t.size()) throw PreconditionError("dimension", "divisor vectors of differing length");
    t = componentwise_min(t, g);
  }
  return t;
}

ClassGroupDesc class_group_s(const BlockMonoid& M) {
  // Hermite basis of the image of W, rows are basis vectors of Z^d
  const IntMat B = hnf_rows(M.weight_matrix().transpose());
  const std::size_t k = B.rows();
  const IntMat Bcols = B.transpose();
  ClassGroupDesc desc;
  desc.invariant_factors.assign(k, Int(0));
  desc.projection = IntMat(k, M.num_primes());
  for (std::size_t j = 0; j < M.num_primes(); ++j) {
    const auto c = lattice_coordinates(Bcols, M.weights()[j]);
    if (!c) throw Error("class_group_s: weight outside its own image");
    for (std::size_t i = 0; i < k; ++i) desc.projection(i, j) = (*c)[i];
  }
  return desc;
}

IntVec class_of_divisor(const BlockMonoid& M, const IntVec& t) {
  if (t.size() != M.num_primes()) throw PreconditionError("dimension", "divisor of wrong length");
  return class_group_s(M).classify(t);
}

std::vector<IntVec> generators_of_divisor(const BlockMonoid& M, const IntVec& t, long bound) {
  const std::size_t r = M.num_primes();
  if (t.size() != r) throw PreconditionError("dimension", "divisor of wrong length");
  if (M.is_zero_sum(t)) return {t};
  const IntVec target = -M.weight_matrix().apply(t);
  std::vector<IntVec> gens;
  std::vector<bool> attained(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    if (attained[i]) continue;
    std::optional<IntVec> found;
    for (long s = 0; s <= bound && !found; ++s)
      for_each_composition(r, s, [&](const IntVec& v) {
        if (v[i] != 0 || M.weight_matrix().apply(v) != target) return true;
        found = v;
        return false;
      });
    if (!found)
      throw ExhaustedError("generators_of_divisor: coordinate " + std::to_string(i) +
                           " not attained within bound " + std::to_string(bound));
    const IntVec x = t + *found;
    for (std::size_t j = 0; j < r; ++j)
      if (x[j] == t[j]) attained[j] = true;
    gens.push_back(x);
  }
  return gens;
}

std::vector<std::size_t> avoiding_primes(const BlockMonoid& M, const std::vector<IntVec>& gens) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < M.num_primes(); ++i)
    if (std::all_of(gens.begin(), gens.end(), [&](const IntVec& g) { return g.at(i) == 0; }))
      out.push_back(i);
  return out;
}

std::size_t find_prime_avoiding(const BlockMonoid& M, const std::vector<IntVec>& gens) {
  const auto av = avoiding_primes(M, gens);
  if (av.empty()) throw PreconditionError("no avoiding prime", "every prime divisor meets the given elements");
  return av.front();
}

WitnessReport valuation_witness_search(const BlockMonoid& M, const IntVec& alpha, const IntVec& t,
                                      long bound, long threshold) {
  if (!M.contains(alpha)) throw PreconditionError("alpha-in-monoid", to_string(alpha) + " is not in B(G0)");
  if (t.size() != alpha.size() || !dominates(alpha, t))
    throw PreconditionError("alpha-in-ideal", to_string(alpha) + " is not in the given ideal");
  if (bound < 0) throw PreconditionError("bound-nonnegative", "bound must be >= 0");
  WitnessReport rep;
  rep.bound = bound;
  rep.threshold = threshold;
  const IntVec alpha2 = alpha + alpha;
  bool first = true;
  for (const auto& a : enumerate_elements(M, bound)) {
    const IntVec x = alpha2 + a - alpha;
    ++rep.tested;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != alpha[i] + a[i]) rep.additivity_checked = false;
      if (first || x[i] < rep.min_valuation) rep.min_valuation = x[i];
      first = false;
      if (!rep.witness && x[i] <= threshold) {
        rep.witness = a;
        rep.witness_prime = i;
      }
    }
    if (rep.witness) break;
  }
  return rep;
}

}  // namespace krull
