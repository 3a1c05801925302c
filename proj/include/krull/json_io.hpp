#pragma once

// JSON encoding of the library types. Integers and rationals travel as
// decimal strings; objects use sorted keys, so equal values serialize to
// equal bytes.

#include <string>

#include "json.hpp"
#include "krull/constructions.hpp"
#include "krull/counterexample.hpp"

namespace krull::jsonio {

using json = nlohmann::json;

json to_json(const Int& x);
json to_json(const IntVec& v);
Int parse_int(const json& j, const std::string& what);
Rat parse_rat(const std::string& s, const std::string& what);
IntVec parse_vec(const json& j, const std::string& what);
// "1,-2,3"
IntVec parse_vec_text(const std::string& s, const std::string& what);

// "Z", "Q" or "Z[sqrt(d)]"
DomainInstance parse_domain(const std::string& s);

// {"free": "n"} or {"weights": [["-2"], ["-1"], ...]}
ExponentGroup parse_group(const json& j);
json to_json(const ExponentGroup& g);

// "3/2", "1+sqrt(-5)", "-1/2*sqrt(-5)", "2-3*sqrt(-5)"
FieldElem parse_field_elem(const DomainInstance& dom, const std::string& s);

// Generators of the v-ideal; an empty list is the unit ideal.
FracIdealD parse_ideal(const DomainInstance& dom, const json& gens);
json to_json(const DomainInstance& dom, const FracIdealD& I);

// "p" or "p:root"; the kind follows from the splitting of p.
PrimePlace parse_prime(const DomainInstance& dom, const json& j);
json to_json(const PrimePlace& P);
json to_json(const DivisorD& div);

json to_json(const MonoidAlgebra& alg, const AlgebraElem& f);
// {"terms": [{"coeff": "...", "exp": [...]}, ...]} in any order
AlgebraElem parse_element(const MonoidAlgebra& alg, const json& j);
// "2@0,0;1@1,0": coefficient@exponent terms separated by ';'
AlgebraElem parse_element_text(const MonoidAlgebra& alg, const std::string& s);

json to_json(const MonoidAlgebra& alg, const IrreducibilityCertificate& c);
IrreducibilityCertificate parse_certificate(const MonoidAlgebra& alg, const json& j);
json to_json(const MonoidAlgebra& alg, const PrimeDivisorCertificate& c);

json to_json(const ClassGroupDesc& cg);
json to_json(const MonoidAlgebra& alg, const OracleResult& r);
json to_json(const MonoidAlgebra& alg, const IntersectionCheckReport& r);
json to_json(const WitnessReport& r);
json to_json(const CounterexampleReport& r);
json to_json(const DivisorTheoryReport& r);

}  // namespace krull::jsonio
