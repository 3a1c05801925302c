#pragma once

// Elements of K[G] with G the quotient group of a block monoid S (or a free
// group Z^n, where S = G), the D[S] membership test, content ideals A_f / E_f
// and the principal intersection  f K[G] ∩ D[S] = f A_f^{-1}[E_f^{-1}].
//
// Exponents are coordinates with respect to the lattice basis of G.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "krull/krull_domain.hpp"
#include "krull/krull_monoid.hpp"
#include "krull/lattice.hpp"

namespace krull {

class ExponentGroup {
 public:
  static ExponentGroup free_group(std::size_t n);
  static ExponentGroup of_monoid(BlockMonoid m);

  std::size_t rank() const { return n_; }
  bool has_monoid() const { return monoid_.has_value(); }
  const BlockMonoid& monoid() const;
  // height-one primes of S; none when S = G
  std::size_t num_primes() const { return monoid_ ? monoid_->num_primes() : 0; }
  // divisor vector e(x) of a group element; empty when S = G
  IntVec divisor(const IntVec& coords) const;
  bool in_monoid(const IntVec& coords) const;
  std::string name() const;

  friend bool operator==(const ExponentGroup& x, const ExponentGroup& y) {
    return x.n_ == y.n_ && x.monoid_ == y.monoid_;
  }

 private:
  std::size_t n_ = 0;
  std::optional<BlockMonoid> monoid_;
};

struct Term {
  IntVec exp;
  FieldElem coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Terms strictly increasing under the algebra's order, no zero coefficients.
struct AlgebraElem {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  friend bool operator==(const AlgebraElem&, const AlgebraElem&) = default;
};

struct ContentPair {
  FracIdealD A;
  IntVec E;  // divisor vector of the v-ideal of S generated by the exponents
};

struct PrincipalIntersectionRep {
  AlgebraElem f;
  DivisorD domain_part;  // divisor of A_f^{-1}
  IntVec monoid_part;    // divisor of E_f^{-1}
  IntVec domain_class;
  IntVec monoid_class;
};

class MonoidAlgebra {
 public:
  MonoidAlgebra(DomainInstance dom, ExponentGroup group, std::optional<TotalOrderSpec> order = std::nullopt);

  const DomainInstance& domain() const { return dom_; }
  const ExponentGroup& group() const { return group_; }
  const TotalOrderSpec& order() const { return order_; }

  AlgebraElem make(std::vector<Term> terms) const;
  bool is_normalized(const AlgebraElem& f) const;
  AlgebraElem constant(const FieldElem& c) const;
  AlgebraElem monomial(const FieldElem& c, const IntVec& exp) const;
  FieldElem coeff(const Rat& re, const Rat& im = 0) const { return field_elem(dom_, re, im); }

  AlgebraElem add(const AlgebraElem& f, const AlgebraElem& g) const;
  AlgebraElem sub(const AlgebraElem& f, const AlgebraElem& g) const;
  AlgebraElem neg(const AlgebraElem& f) const;
  AlgebraElem mul(const AlgebraElem& f, const AlgebraElem& g) const;
  AlgebraElem scale(const FieldElem& c, const AlgebraElem& f) const;

  ContentPair contents(const AlgebraElem& f) const;
  bool is_member_DS(const AlgebraElem& f) const;
  PrincipalIntersectionRep intersect_principal(const AlgebraElem& f) const;

  const DomainClassGroup& domain_class_group() const;
  const ClassGroupDesc& monoid_class_group() const;
  IntVec domain_class(const FracIdealD& I) const;
  IntVec monoid_class(const IntVec& t) const;

  std::string to_string(const AlgebraElem& f) const;

 private:
  DomainInstance dom_;
  ExponentGroup group_;
  TotalOrderSpec order_;
  mutable std::shared_ptr<const DomainClassGroup> dcg_;
  mutable std::shared_ptr<const ClassGroupDesc> mcg_;
};

struct IntersectionCheckOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  long box = 3;          // exponent coordinates of uniform draws lie in [-box, box]
  long max_height = 12;  // numerators and denominators of uniform coefficients
  long gen_bound = 24;   // lattice search bound for generators of E_f^{-1}
};

struct IntersectionCheckReport {
  bool pass = true;
  std::size_t generator_checks = 0;  // f c X^h for generators c, h
  std::size_t samples = 0;
  std::size_t hits = 0;              // samples with f h in D[S]
  std::size_t inside = 0;            // samples with h in A^{-1}[E^{-1}]
  DivisorD domain_part;
  IntVec monoid_part;
  std::string failure;                // empty on pass
  std::optional<AlgebraElem> counterexample;
};

// Checks f A^{-1}[E^{-1}] = f K[G] ∩ D[S] for the given representation (by
// default the one computed by intersect_principal): products with generators,
// then random h from a seeded mix of uniform and near-boundary draws.
IntersectionCheckReport intersection_oracle_check(const MonoidAlgebra& alg, const AlgebraElem& f, const IntersectionCheckOptions& opt,
                                   const std::optional<PrincipalIntersectionRep>& claimed = std::nullopt);

}  // namespace krull
