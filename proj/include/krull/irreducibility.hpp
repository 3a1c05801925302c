#pragma once

// Irreducibility certificates for the three element shapes the constructions
// produce, and a brute-force factorization oracle for rational coefficients.

#include <optional>
#include <string>
#include <vector>

#include "krull/monoid_algebra.hpp"

namespace krull {

enum class CertKind { Binomial, Eisenstein, MonomialSum, OracleVerified };
std::string to_string(CertKind k);

struct TranscriptStep {
  std::string clause;
  std::string value;
  bool ok = true;
  friend bool operator==(const TranscriptStep&, const TranscriptStep&) = default;
};

struct IrreducibilityCertificate {
  CertKind kind = CertKind::Binomial;
  AlgebraElem element;

  // binomial: a + b X^g
  std::optional<FieldElem> a, b;
  std::optional<IntVec> exponent;
  // Eisenstein
  std::optional<PrimePlace> prime;
  // monomial sum: X^{g_1} + ... + X^{g_n} + X^{g_n + a} at the prime divisor P of S
  std::vector<IntVec> sum_exponents;
  std::optional<IntVec> sum_shift;
  std::optional<std::size_t> monoid_prime;

  std::vector<TranscriptStep> transcript;
  std::string assumption;
};

// a + b X^g with g of height zero (coordinate gcd 1).
IrreducibilityCertificate binomial_certificate(const MonoidAlgebra& alg, const FieldElem& a, const FieldElem& b,
                                              const IntVec& g);

// Leading coefficient a P-unit, all others of P-valuation >= 1, trailing
// coefficient of P-valuation exactly 1, at least two terms.
IrreducibilityCertificate eisenstein_certificate(const MonoidAlgebra& alg, const AlgebraElem& f, const PrimePlace& P);

// gs: exponents (lattice coordinates) with v_P = 0, a: element of S with
// v_P(a) = 1; builds X^{g_1} + ... + X^{g_n} + X^{g_n + a}.
IrreducibilityCertificate monomial_sum_certificate(const MonoidAlgebra& alg, const std::vector<IntVec>& gs,
                                             const IntVec& a, std::size_t P);

// Independent replay: rebuilds every checked clause from the element and the
// witnesses and compares with the stored transcript.
bool reverify_certificate(const MonoidAlgebra& alg, const IrreducibilityCertificate& cert);

enum class OracleVerdict { Irreducible, Reducible, Unit, Unknown };
std::string to_string(OracleVerdict v);

struct OracleCaps {
  long max_degree = 8;           // degree after Kronecker substitution
  Int max_coefficient = 10000;   // of the primitive integer polynomial
  long max_attempts = 2000000;   // interpolation candidates
};

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::Unknown;
  std::vector<AlgebraElem> factors;  // two non-unit factors when reducible
  long normalized_degree = -1;
  std::string reason;
};

OracleResult kronecker_irreducible_oracle(const MonoidAlgebra& alg, const AlgebraElem& f,
                                          const OracleCaps& caps = {});

// Univariate helpers, exposed for testing. Polynomials are coefficient
// vectors, constant term first.
using UPoly = std::vector<Int>;
// Factor of smallest degree >= min_degree and <= deg/2, if any; nullopt when
// none exists, throws ExhaustedError when max_attempts runs out.
std::optional<UPoly> kronecker_find_factor(const UPoly& u, long min_degree, long max_attempts);
// Complete factorization of a primitive polynomial into irreducibles
// (with multiplicity), up to sign.
std::vector<UPoly> kronecker_factor(const UPoly& u, long max_attempts);

}  // namespace krull
