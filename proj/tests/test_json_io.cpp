#include <random>

#include "doctest.h"
#include "krull/errors.hpp"
#include "krull/json_io.hpp"

using namespace krull;
using namespace krull::jsonio;

namespace {

IntVec vec(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("integers and vectors travel as decimal strings") {
  CHECK(to_json(Int("123456789012345678901234567890")).dump() == "\"123456789012345678901234567890\"");
  CHECK(parse_int(json("-42"), "x") == -42);
  CHECK(parse_int(json(17), "x") == 17);
  CHECK_THROWS_AS(parse_int(json("1.5"), "x"), SchemaError);
  CHECK_THROWS_AS(parse_int(json(true), "x"), SchemaError);
  CHECK(parse_vec(to_json(vec({3, -1, 0})), "v") == vec({3, -1, 0}));
  CHECK(parse_vec_text("1, -2,3", "v") == vec({1, -2, 3}));
  CHECK(parse_rat("-6/4", "q") == Rat(-3, 2));
  CHECK_THROWS_AS(parse_rat("1/0", "q"), SchemaError);
}

TEST_CASE("domains") {
  CHECK(parse_domain("Z") == DomainInstance::integers());
  CHECK(parse_domain("Q") == DomainInstance::rationals());
  CHECK(parse_domain("Z[sqrt(-5)]") == DomainInstance::quadratic(-5));
  CHECK_THROWS_AS(parse_domain("R"), SchemaError);
  CHECK_THROWS_AS(parse_domain("Z[sqrt(-3)]"), PreconditionError);
}

TEST_CASE("coefficients") {
  const auto q = DomainInstance::quadratic(-5);
  CHECK(parse_field_elem(q, "3") == field_elem(q, 3));
  CHECK(parse_field_elem(q, "-1/2") == field_elem(q, Rat(-1, 2)));
  CHECK(parse_field_elem(q, "1+sqrt(-5)") == field_elem(q, 1, 1));
  CHECK(parse_field_elem(q, "12*sqrt(-5)") == field_elem(q, 0, 12));
  CHECK(parse_field_elem(q, "-sqrt(-5)") == field_elem(q, 0, -1));
  CHECK(parse_field_elem(q, "1 - 2/3*sqrt(-5)") == field_elem(q, 1, Rat(-2, 3)));
  for (const char* bad : {"", "1+", "abc", "1/0", "sqrt(-6)", "2sqrt(-5)x"})
    CHECK_THROWS_AS(parse_field_elem(q, bad), SchemaError);
  CHECK_THROWS_AS(parse_field_elem(DomainInstance::integers(), "sqrt(-5)"), SchemaError);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Rat re(static_cast<long>(rng() % 41) - 20, 1 + rng() % 9);
    const Rat im(static_cast<long>(rng() % 41) - 20, 1 + rng() % 9);
    const FieldElem x = field_elem(q, re, im);
    CHECK(parse_field_elem(q, x.to_string()) == x);
  }
}

TEST_CASE("ideals and primes") {
  const auto q = DomainInstance::quadratic(-5);
  const PrimePlace P2 = parse_prime(q, json("2"));
  CHECK(P2.kind == PrimeKind::Ramified);
  CHECK(parse_ideal(q, json::array({"2", "1+sqrt(-5)"})) == prime_ideal(q, P2));
  CHECK(parse_ideal(q, json::array()) == FracIdealD());
  CHECK_THROWS_AS(parse_ideal(q, json::array({"0"})), SchemaError);
  CHECK_THROWS_AS(parse_prime(q, json("3")), SchemaError);  // splits
  CHECK(parse_prime(q, json("3:1")).kind == PrimeKind::Split);
  CHECK_THROWS_AS(parse_prime(q, json("4")), SchemaError);
  CHECK(parse_prime(DomainInstance::integers(), json("7")).p == 7);
  // the serialized ideal parses back to itself
  const FracIdealD I = parse_ideal(q, json::array({"3", "1-sqrt(-5)"}));
  CHECK(parse_ideal(q, to_json(q, I)["generators"]) == I);
}

TEST_CASE("groups") {
  const ExponentGroup g = parse_group(json::parse(R"({"weights": ["-2", "-1", "1", "2"]})"));
  CHECK(g.has_monoid());
  CHECK(g.rank() == 3);
  CHECK(parse_group(to_json(g)) == g);
  CHECK(parse_group(json::parse(R"({"free": "2"})")) == ExponentGroup::free_group(2));
  CHECK_THROWS_AS(parse_group(json::parse(R"({"free": "2", "weights": []})")), SchemaError);
  CHECK_THROWS_AS(parse_group(json::parse(R"({"free": "0"})")), SchemaError);
  CHECK_THROWS_AS(parse_group(json::parse(R"({"weights": ["1", "1"]})")), PreconditionError);
}

TEST_CASE("elements round-trip") {
  const MonoidAlgebra alg(DomainInstance::quadratic(-5), ExponentGroup::free_group(2));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    std::vector<Term> ts;
    for (int k = 0; k < 4; ++k)
      ts.push_back(Term{vec({static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3}),
                        alg.coeff(Rat(static_cast<long>(rng() % 21) - 10, 1 + rng() % 4),
                                  Rat(static_cast<long>(rng() % 5) - 2))});
    const AlgebraElem f = alg.make(ts);
    const json j = to_json(alg, f);
    CHECK(parse_element(alg, j) == f);
    CHECK(parse_element(alg, json::parse(j.dump())).terms.size() == f.size());
  }
  CHECK(parse_element_text(alg, "2@0,0; 1+sqrt(-5)@1,-1") ==
        alg.add(alg.constant(alg.coeff(2)), alg.monomial(alg.coeff(1, 1), vec({1, -1}))));
  CHECK_THROWS_AS(parse_element_text(alg, "2@0"), SchemaError);
  CHECK_THROWS_AS(parse_element_text(alg, "2"), SchemaError);
}

TEST_CASE("certificates round-trip and replay") {
  const MonoidAlgebra alg(DomainInstance::quadratic(-5), ExponentGroup::free_group(1));
  const PrimePlace P2 = parse_prime(alg.domain(), json("2"));
  const AlgebraElem f = parse_element_text(alg, "1+sqrt(-5)@0;1@1");
  const auto c = eisenstein_certificate(alg, f, P2);
  const json j = to_json(alg, c);
  const auto back = parse_certificate(alg, json::parse(j.dump()));
  CHECK(reverify_certificate(alg, back));
  CHECK(to_json(alg, back) == j);

  json tampered = j;
  tampered["transcript"][0]["value"] = "p=3";
  CHECK_FALSE(reverify_certificate(alg, parse_certificate(alg, tampered)));
  tampered = j;
  tampered["kind"] = "spline";
  CHECK_THROWS_AS(parse_certificate(alg, tampered), SchemaError);

  const MonoidAlgebra a2(DomainInstance::integers(), ExponentGroup::free_group(2));
  const auto m = binomial_certificate(a2, a2.coeff(3), a2.coeff(1), vec({1, 1}));
  CHECK(reverify_certificate(a2, parse_certificate(a2, to_json(a2, m))));
}
