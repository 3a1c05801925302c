#pragma once

// Prime divisors of D[G], K[S] and D[S] in a prescribed divisor class, each
// with an irreducibility certificate and a verified class.

#include <optional>
#include <string>
#include <vector>

#include "krull/irreducibility.hpp"

namespace krull {

inline constexpr long kDefaultSearchBound = 24;

struct PrimeDivisorCertificate {
  AlgebraElem element;
  IrreducibilityCertificate irreducibility;
  PrincipalIntersectionRep intersection;
  IntVec target_domain_class;
  IntVec target_monoid_class;
  bool verified = false;
};

// D[G], G = Z^n: g = a/b + X^alpha for the triples (a, b, P) of the
// two-generator step; class [I].
std::vector<PrimeDivisorCertificate> construct_shifted_binomials(const MonoidAlgebra& alg, const FracIdealD& I,
                                                         const IntVec& alpha, std::size_t m);

// D[G], G = Z^n: a + b X^g with I^{-1} = (a, b)_v and distinct height-zero g.
std::vector<PrimeDivisorCertificate> construct_height_zero_binomials(const MonoidAlgebra& alg, const FracIdealD& I,
                                                              std::size_t m);

// Height-zero exponents with first nonzero coordinate positive, by L1 norm
// then lexicographically descending.
std::vector<IntVec> height_zero_exponents(std::size_t n, std::size_t count);

struct ValuationOneBasis {
  IntMat basis;   // columns, in lattice coordinates; the last column is a
  IntVec a;       // lattice coordinates of an element of S with v_P(a) = 1
  std::size_t prime = 0;
};

ValuationOneBasis valuation_one_basis(const BlockMonoid& M, long atom_bound = kDefaultSearchBound);

struct FieldCaseOutcome {
  std::vector<PrimeDivisorCertificate> certificates;
  std::size_t requested = 0;
  std::size_t achieved = 0;
  std::string note;  // set when fewer than requested could be built
};

// K[S]: g = X^{g_1} + ... + X^{g_n} + X^{g_n + a} for prime divisors P of S
// avoiding the generators g_i of J^{-1}; class [J]. `t` is the divisor of J.
FieldCaseOutcome construct_field_case(const MonoidAlgebra& alg, const IntVec& t, std::size_t m,
                                      long bound = kDefaultSearchBound);

// D[S]: g = X^h + sum_{e in M} p X^e with p = a/b, h the largest exponent;
// the k-th certificate uses k further points of J^{-1}. Class ([I], [J]).
std::vector<PrimeDivisorCertificate> construct_in_class(const MonoidAlgebra& alg, const FracIdealD& I,
                                                       const IntVec& t, std::size_t m,
                                                       long bound = kDefaultSearchBound);

// ([A_g^{-1}], [E_g^{-1}]) recomputed from the element equals ([I], [J]).
bool verify_prime_divisor_class(const MonoidAlgebra& alg, const PrimeDivisorCertificate& cert, const FracIdealD& I,
                                const std::optional<IntVec>& t);

// Certificate replay plus class check, with no construction-time state.
bool reverify_prime_divisor(const MonoidAlgebra& alg, const PrimeDivisorCertificate& cert, const FracIdealD& I,
                            const std::optional<IntVec>& t);

bool associated(const AlgebraElem& f, const AlgebraElem& g);
bool pairwise_non_associated(const std::vector<AlgebraElem>& gs);

}  // namespace krull
