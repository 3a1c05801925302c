#pragma once

// Block monoids B(G0): zero-sum multiplicity vectors over a finite set of
// nonzero weights G0 = {w_1, ..., w_r} in Z^d. The embedding into N_0^r is
// the candidate divisor theory; prime divisors are the coordinates, and the
// quotient group is the zero-sum lattice L = ker W.
//
// Divisors (FracVIdealS) are plain vectors t in Z^r standing for
// { x in L : e(x) >= t }.

#include <optional>
#include <string>
#include <vector>

#include "krull/lattice.hpp"

namespace krull {

class BlockMonoid {
 public:
  // weights are the columns of W, all of the same length d
  explicit BlockMonoid(std::vector<IntVec> weights);

  std::size_t ambient_rank() const { return d_; }
  std::size_t num_primes() const { return weights_.size(); }
  const std::vector<IntVec>& weights() const { return weights_; }
  const IntMat& weight_matrix() const { return W_; }
  // columns: a basis of L in Z^r
  const IntMat& lattice_basis() const { return K_; }
  std::size_t lattice_rank() const { return K_.cols(); }

  bool is_zero_sum(const IntVec& e) const;
  bool contains(const IntVec& e) const;  // zero-sum and nonnegative
  // e(x) for x given in lattice coordinates
  IntVec divisor(const IntVec& coords) const;
  // lattice coordinates of a zero-sum vector
  IntVec coordinates(const IntVec& e) const;

  friend bool operator==(const BlockMonoid& x, const BlockMonoid& y) { return x.weights_ == y.weights_; }

 private:
  std::size_t d_ = 0;
  std::vector<IntVec> weights_;
  IntMat W_;
  IntMat K_;
};

BlockMonoid make_block_monoid(const std::vector<IntVec>& weights);
// one-dimensional convenience: weights are integers
BlockMonoid make_block_monoid(const std::vector<long>& weights);

inline Int valuation_s(const IntVec& e, std::size_t i) { return e.at(i); }

// Every element with total multiplicity <= bound, ordered by total, then
// lexicographically descending. The zero element comes first.
std::vector<IntVec> enumerate_elements(const BlockMonoid& M, long bound);
std::vector<IntVec> enumerate_atoms(const BlockMonoid& M, long bound);

enum class DivisorTheoryStatus { DivisorTheory, NotDivisorTheory, Inconclusive };
std::string to_string(DivisorTheoryStatus s);

struct DivisorTheoryReport {
  DivisorTheoryStatus status = DivisorTheoryStatus::Inconclusive;
  long bound = 0;
  // per coordinate: meet of e(x) over elements x with e_i(x) > 0, if any
  std::vector<std::optional<IntVec>> meets;
  std::vector<std::size_t> unreached;
  std::string note;
};

DivisorTheoryReport verify_divisor_theory(const BlockMonoid& M, long bound);

// Divisor vectors. `gens` are divisor vectors e(g).
IntVec v_closure_s(const std::vector<IntVec>& gens);
inline IntVec ideal_inverse_s(const IntVec& t) { return -t; }
inline IntVec ideal_v_mul_s(const IntVec& t, const IntVec& u) { return t + u; }
inline bool ideal_contains_s(const IntVec& t, const IntVec& e) { return dominates(e, t); }

// coker(L -> Z^r), identified with the image of W. The invariant factors are
// all 0 (a free group of rank rank(W)) and the projection sends t to the
// coordinates of W t in a Hermite basis of the image.
ClassGroupDesc class_group_s(const BlockMonoid& M);
IntVec class_of_divisor(const BlockMonoid& M, const IntVec& t);

// Divisor vectors x >= t of lattice points whose componentwise minimum is t.
// Throws ExhaustedError if some coordinate is not attained within `bound`
// (total multiplicity of x - t).
std::vector<IntVec> generators_of_divisor(const BlockMonoid& M, const IntVec& t, long bound);

// Indices i with e_i = 0 for every given divisor vector, ascending.
std::vector<std::size_t> avoiding_primes(const BlockMonoid& M, const std::vector<IntVec>& gens);
// Smallest such index; throws PreconditionError "no avoiding prime".
std::size_t find_prime_avoiding(const BlockMonoid& M, const std::vector<IntVec>& gens);

struct WitnessReport {
  long bound = 0;
  long threshold = 1;
  std::size_t tested = 0;
  Int min_valuation = 0;  // over all tested (a, i)
  std::optional<IntVec> witness;
  std::optional<std::size_t> witness_prime;
  // v_i(2 alpha + a - alpha) == v_i(alpha) + v_i(a) held for every tested a
  bool additivity_checked = true;
};

// Searches a in B(G0) with |a| <= bound for one making
// min_i v_i(2 alpha + a - alpha) <= threshold. Requires alpha in the monoid
// and alpha in I (e(alpha) >= t).
WitnessReport valuation_witness_search(const BlockMonoid& M, const IntVec& alpha, const IntVec& t,
                                      long bound, long threshold = 1);

}  // namespace krull
