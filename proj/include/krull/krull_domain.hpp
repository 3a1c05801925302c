#pragma once

// Concrete Krull domains with computable essential valuations: the integers,
// imaginary quadratic rings Z[sqrt d] (d < 0 squarefree, d = 2,3 mod 4, so
// Z[sqrt d] is the maximal order) and, as the degenerate case with no
// height-one primes at all, the field Q.
//
// Fractional ideals are stored as  scalar * L  where L is a primitive
// integral ideal given by its Hermite basis  { a, b + c*sqrt(d) }.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "krull/lattice.hpp"

namespace krull {

inline const Int kDefaultFactorBound{1000000};

enum class DomainKind { Integers, Quadratic, RationalField };

struct DomainInstance {
  DomainKind kind = DomainKind::Integers;
  Int d = 0;  // only meaningful for Quadratic
  Int factor_bound = kDefaultFactorBound;

  static DomainInstance integers();
  static DomainInstance rationals();
  // Validates d < 0, squarefree, d mod 4 in {2, 3}.
  static DomainInstance quadratic(const Int& d);

  bool is_field() const { return kind == DomainKind::RationalField; }
  bool is_quadratic() const { return kind == DomainKind::Quadratic; }
  std::string name() const;

  friend bool operator==(const DomainInstance& x, const DomainInstance& y) {
    return x.kind == y.kind && x.d == y.d;
  }
};

// x + y*sqrt(d) with x, y rational. d == 0 marks a plain rational number.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(long v) : re_(v) {}  // NOLINT: integers embed implicitly
  FieldElem(const Rat& re) : re_(re) { re_.canonicalize(); }  // NOLINT
  FieldElem(const Rat& re, const Rat& im, const Int& d);

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }
  const Int& d() const { return d_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_rational() const { return im_ == 0; }
  // both coordinates integral (Z[sqrt d] is the maximal order here)
  bool is_integral() const;
  Int common_denominator() const;

  FieldElem conj() const;
  Rat norm() const;

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator-(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator*(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator/(const FieldElem& x, const FieldElem& y);
  friend bool operator==(const FieldElem& x, const FieldElem& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }

  std::string to_string() const;

 private:
  Rat re_ = 0;
  Rat im_ = 0;
  Int d_ = 0;
};

FieldElem field_elem(const DomainInstance& dom, const Rat& re, const Rat& im = 0);

enum class PrimeKind { Rational, Ramified, Split, Inert };

// A height-one prime. For Z it is (p); for Z[sqrt d] it is (p, sqrt(d) - root)
// unless p is inert, in which case it is (p) and root is 0.
struct PrimePlace {
  Int p;
  PrimeKind kind = PrimeKind::Rational;
  Int root = 0;

  std::string to_string() const;
  friend bool operator==(const PrimePlace& x, const PrimePlace& y) {
    return x.p == y.p && x.kind == y.kind && x.root == y.root;
  }
  friend bool operator<(const PrimePlace& x, const PrimePlace& y) {
    if (x.p != y.p) return x.p < y.p;
    if (x.kind != y.kind) return x.kind < y.kind;
    return x.root < y.root;
  }
};

using DivisorD = std::map<PrimePlace, long>;

std::string to_string(const DivisorD& div);

class FracIdealD {
 public:
  // The unit ideal D (or K when D is a field).
  FracIdealD() = default;

  const Rat& scalar() const { return scalar_; }
  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }

  // Z-basis of the ideal, scaled: {s*a, s*(b + c sqrt d)} (one element for Z).
  std::vector<FieldElem> generators(const DomainInstance& dom) const;
  // norm of the primitive integral part
  Int lattice_norm() const { return a_ * c_; }

  std::string to_string(const DomainInstance& dom) const;

  friend bool operator==(const FracIdealD&, const FracIdealD&) = default;

  // Canonicalizes scalar * <a, b + c sqrt d>; a, c > 0 and the lattice must
  // already be an ideal in Hermite form.
  static FracIdealD from_parts(const Rat& scalar, const Int& a, const Int& b, const Int& c);

 private:
  Rat scalar_ = 1;
  Int a_ = 1;
  Int b_ = 0;
  Int c_ = 1;
};

std::vector<PrimePlace> primes_above(const DomainInstance& dom, const Int& p);
FracIdealD prime_ideal(const DomainInstance& dom, const PrimePlace& P);
// Validates that P is a height-one prime of dom.
void check_prime_place(const DomainInstance& dom, const PrimePlace& P);

long valuation_d(const DomainInstance& dom, const FieldElem& x, const PrimePlace& P);
long valuation_d(const DomainInstance& dom, const FracIdealD& I, const PrimePlace& P);

// Smallest divisorial fractional ideal containing the generators; in these
// Dedekind domains it is the ideal they generate.
FracIdealD v_closure_d(const DomainInstance& dom, const std::vector<FieldElem>& gens);
FracIdealD principal_ideal(const DomainInstance& dom, const FieldElem& x);

DivisorD divisor_of(const DomainInstance& dom, const FracIdealD& I);
DivisorD divisor_of(const DomainInstance& dom, const FieldElem& x);
FracIdealD ideal_from_divisor(const DomainInstance& dom, const DivisorD& div);

FracIdealD ideal_inverse_d(const DomainInstance& dom, const FracIdealD& I);
FracIdealD ideal_v_mul(const DomainInstance& dom, const FracIdealD& I, const FracIdealD& J);
FracIdealD ideal_conjugate(const DomainInstance& dom, const FracIdealD& I);
bool ideal_contains(const DomainInstance& dom, const FracIdealD& I, const FieldElem& x);
// A generator when I is principal.
std::optional<FieldElem> principal_generator(const DomainInstance& dom, const FracIdealD& I);

// C_v(D) with a way to classify arbitrary ideals. For Z[sqrt d] the group is
// enumerated from the primes below the Minkowski bound.
class DomainClassGroup {
 public:
  explicit DomainClassGroup(DomainInstance dom);

  const DomainInstance& domain() const { return dom_; }
  const ClassGroupDesc& desc() const { return desc_; }
  // primes whose exponent vectors `desc().projection` acts on
  const std::vector<PrimePlace>& generators() const { return gens_; }
  std::size_t order() const { return reps_.size(); }

  IntVec class_of(const FracIdealD& I) const;
  IntVec class_of(const DivisorD& div) const;

 private:
  DomainInstance dom_;
  std::vector<PrimePlace> gens_;
  ClassGroupDesc desc_;
  // primitive representative ideal and its exponent vector over gens_
  std::vector<std::pair<FracIdealD, IntVec>> reps_;
};

DomainClassGroup class_group_d(const DomainInstance& dom);

// Element a with v_P(a) = targets[P] for every listed P and v_Q(a) >= 0 at
// every other height-one prime. Lattice points of the target ideal are
// scanned by increasing norm; the first hit wins.
FieldElem approximate_element(const DomainInstance& dom, const DivisorD& targets);

struct TwoGenerators {
  FieldElem a;
  FieldElem b;
  PrimePlace P;
};

// m triples (a, b, P) with pairwise distinct P, each with (a, b)_v = I^{-1}
// and v_P(a/b) = 1. Every triple is re-verified before it is returned.
std::vector<TwoGenerators> two_generators_for(const DomainInstance& dom, const FracIdealD& I,
                                                  std::size_t m);

// Independent recomputation of the two defining properties of a triple.
bool verify_two_generators(const DomainInstance& dom, const FracIdealD& I, const TwoGenerators& t);

}  // namespace krull
