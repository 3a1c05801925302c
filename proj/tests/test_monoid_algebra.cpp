#include <random>

#include "doctest.h"
#include "krull/errors.hpp"
#include "krull/monoid_algebra.hpp"

using namespace krull;

namespace {

IntVec vec(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// (Z, B({-1,1})): the lattice basis is (1,1), so S is the set of coordinates >= 0
MonoidAlgebra z_n0() {
  return MonoidAlgebra(DomainInstance::integers(), ExponentGroup::of_monoid(make_block_monoid(std::vector<long>{-1, 1})));
}

MonoidAlgebra z_pm12(std::optional<TotalOrderSpec> ord = std::nullopt) {
  return MonoidAlgebra(DomainInstance::integers(),
                       ExponentGroup::of_monoid(make_block_monoid(std::vector<long>{-2, -1, 1, 2})), ord);
}

AlgebraElem poly(const MonoidAlgebra& alg, std::initializer_list<std::pair<Rat, IntVec>> terms) {
  std::vector<Term> t;
  for (const auto& [c, e] : terms) t.push_back(Term{e, alg.coeff(c)});
  return alg.make(t);
}

AlgebraElem random_elem(const MonoidAlgebra& alg, std::mt19937_64& rng, int max_terms, long box, long height) {
  for (;;) {
    std::vector<Term> t;
    const int k = 1 + static_cast<int>(rng() % max_terms);
    for (int i = 0; i < k; ++i) {
      IntVec e;
      for (std::size_t j = 0; j < alg.group().rank(); ++j) e.emplace_back(static_cast<long>(rng() % (2 * box + 1)) - box);
      const long num = static_cast<long>(rng() % (2 * height + 1)) - height;
      const long den = 1 + static_cast<long>(rng() % height);
      Rat im = 0;
      if (alg.domain().is_quadratic() && rng() % 2) im = Rat(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3);
      t.push_back(Term{e, alg.coeff(Rat(num, den), im)});
    }
    AlgebraElem f = alg.make(t);
    if (!f.is_zero()) return f;
  }
}

DivisorD sum(DivisorD a, const DivisorD& b) {
  for (const auto& [P, e] : b)
    if ((a[P] += e) == 0) a.erase(P);
  return a;
}

}  // namespace

TEST_CASE("ring operations") {
  const MonoidAlgebra alg = z_pm12();
  const IntVec a = vec({1, 0, 0}), b = vec({0, 1, 0});
  const AlgebraElem one_plus = poly(alg, {{1, vec({0, 0, 0})}, {1, a}});
  const AlgebraElem one_minus = poly(alg, {{1, vec({0, 0, 0})}, {-1, a}});
  CHECK(alg.mul(one_plus, one_minus) == poly(alg, {{1, vec({0, 0, 0})}, {-1, a + a}}));
  CHECK(alg.mul(one_plus, AlgebraElem{}).is_zero());
  const AlgebraElem f = poly(alg, {{2, vec({0, 0, 0})}, {1, a}});
  const AlgebraElem g = poly(alg, {{3, vec({0, 0, 0})}, {1, b}});
  CHECK(alg.mul(f, g) == poly(alg, {{6, vec({0, 0, 0})}, {3, a}, {2, b}, {1, a + b}}));
  CHECK(alg.sub(f, f).is_zero());
  CHECK_THROWS_AS(alg.monomial(alg.coeff(1), vec({1, 0})), PreconditionError);
}

TEST_CASE("ring laws and normal form under several orders") {
  std::mt19937_64 rng(11);
  const TotalOrderSpec skew({vec({1, 1, 0}), vec({0, 1, -1}), vec({2, 0, 1})});
  for (const MonoidAlgebra& alg : {z_pm12(), z_pm12(skew)}) {
    for (int i = 0; i < 60; ++i) {
      const AlgebraElem f = random_elem(alg, rng, 3, 2, 5);
      const AlgebraElem g = random_elem(alg, rng, 3, 2, 5);
      const AlgebraElem h = random_elem(alg, rng, 3, 2, 5);
      CHECK(alg.is_normalized(alg.mul(f, g)));
      CHECK(alg.mul(f, g) == alg.mul(g, f));
      CHECK(alg.mul(alg.mul(f, g), h) == alg.mul(f, alg.mul(g, h)));
      CHECK(alg.mul(f, alg.add(g, h)) == alg.add(alg.mul(f, g), alg.mul(f, h)));
    }
  }
}

TEST_CASE("contents examples") {
  const MonoidAlgebra alg = z_n0();
  const DomainInstance Z = DomainInstance::integers();
  const IntVec s = vec({1});
  auto c1 = alg.contents(poly(alg, {{2, vec({0})}, {1, s}}));
  CHECK(c1.A == FracIdealD());
  CHECK(c1.E == vec({0, 0}));
  auto c2 = alg.contents(poly(alg, {{4, vec({0})}, {6, s}}));
  CHECK(c2.A == principal_ideal(Z, FieldElem(2)));
  auto c3 = alg.contents(poly(alg, {{Rat(1, 3), s}}));
  CHECK(c3.A == principal_ideal(Z, FieldElem(Rat(1, 3))));
  CHECK(c3.E == vec({1, 1}));
  CHECK_THROWS_AS(alg.contents(AlgebraElem{}), PreconditionError);
}

TEST_CASE("is_member_DS examples") {
  const MonoidAlgebra alg = z_n0();
  CHECK(alg.is_member_DS(poly(alg, {{2, vec({0})}, {1, vec({1})}})));
  CHECK_FALSE(alg.is_member_DS(poly(alg, {{Rat(1, 2), vec({0})}, {1, vec({1})}})));
  CHECK_FALSE(alg.is_member_DS(poly(alg, {{1, vec({-1})}})));
  const MonoidAlgebra q5(DomainInstance::quadratic(-5), ExponentGroup::free_group(2));
  CHECK(q5.is_member_DS(q5.monomial(q5.coeff(1, 1), vec({-3, 2}))));
  CHECK_FALSE(q5.is_member_DS(q5.monomial(q5.coeff(1, Rat(1, 2)), vec({0, 0}))));
}

TEST_CASE("intersect_principal examples") {
  const MonoidAlgebra alg = z_n0();
  const PrimePlace two{2, PrimeKind::Rational, 0};
  const AlgebraElem f = poly(alg, {{2, vec({0})}, {1, vec({1})}});
  const auto r1 = alg.intersect_principal(f);
  CHECK(r1.domain_part.empty());
  CHECK(r1.monoid_part == vec({0, 0}));
  const auto r2 = alg.intersect_principal(poly(alg, {{2, vec({0})}, {2, vec({1})}}));
  CHECK(r2.domain_part == DivisorD{{two, -1}});
  // a unit monomial multiple keeps the class pair and shifts the divisors
  const AlgebraElem u = alg.monomial(alg.coeff(Rat(3, 5)), vec({2}));
  const auto r3 = alg.intersect_principal(alg.mul(u, f));
  CHECK(r3.domain_class == r1.domain_class);
  CHECK(r3.monoid_class == r1.monoid_class);
  CHECK(r3.monoid_part == vec({-2, -2}));
}

TEST_CASE("content multiplicativity over Z (Gauss) and in the monoid") {
  std::mt19937_64 rng(2024);
  const MonoidAlgebra alg = z_pm12();
  const DomainInstance& Z = alg.domain();
  for (int i = 0; i < 120; ++i) {
    const AlgebraElem f = random_elem(alg, rng, 3, 2, 12);
    const AlgebraElem g = random_elem(alg, rng, 3, 2, 12);
    const auto cf = alg.contents(f), cg = alg.contents(g), cfg = alg.contents(alg.mul(f, g));
    CHECK(divisor_of(Z, cfg.A) == sum(divisor_of(Z, cf.A), divisor_of(Z, cg.A)));
    CHECK(cfg.E == cf.E + cg.E);
  }
}

TEST_CASE("content formula over Z[sqrt -5] as v-ideals") {
  std::mt19937_64 rng(5);
  const MonoidAlgebra alg(DomainInstance::quadratic(-5), ExponentGroup::free_group(2));
  const DomainInstance& D = alg.domain();
  for (int i = 0; i < 60; ++i) {
    const AlgebraElem f = random_elem(alg, rng, 3, 2, 6);
    const AlgebraElem g = random_elem(alg, rng, 3, 2, 6);
    const auto cf = alg.contents(f), cg = alg.contents(g), cfg = alg.contents(alg.mul(f, g));
    CHECK(cfg.A == ideal_v_mul(D, cf.A, cg.A));
  }
}

TEST_CASE("intersect_principal is invariant under unit monomials (random)") {
  std::mt19937_64 rng(31);
  const MonoidAlgebra alg(DomainInstance::quadratic(-5),
                          ExponentGroup::of_monoid(make_block_monoid(std::vector<long>{-2, -1, 1, 2})));
  for (int i = 0; i < 40; ++i) {
    const AlgebraElem f = random_elem(alg, rng, 3, 2, 6);
    const IntVec v = vec({static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2, 1});
    const FieldElem c = alg.coeff(Rat(1 + static_cast<long>(rng() % 6), 1 + rng() % 4), 1);
    const auto a = alg.intersect_principal(f);
    const auto b = alg.intersect_principal(alg.mul(alg.monomial(c, v), f));
    CHECK(a.domain_class == b.domain_class);
    CHECK(a.monoid_class == b.monoid_class);
    CHECK(b.monoid_part == a.monoid_part - alg.group().divisor(v));
  }
}

TEST_CASE("intersection oracle examples") {
  const MonoidAlgebra alg = z_n0();
  const PrimePlace two{2, PrimeKind::Rational, 0};
  IntersectionCheckOptions opt;
  opt.samples = 500;
  opt.seed = 7;

  const AlgebraElem f = poly(alg, {{2, vec({0})}, {1, vec({1})}});
  const auto r = intersection_oracle_check(alg, f, opt);
  CHECK(r.pass);
  CHECK(r.samples == 500);
  CHECK(r.hits > 50);
  CHECK(r.hits < 500);

  const AlgebraElem half = poly(alg, {{Rat(1, 2), vec({0})}, {1, vec({1})}});
  const auto rh = intersection_oracle_check(alg, half, opt);
  CHECK(rh.pass);
  CHECK(ideal_from_divisor(alg.domain(), rh.domain_part) == principal_ideal(alg.domain(), FieldElem(2)));

  // negative controls: a claimed monoid part that is too large or too small
  auto bigger = alg.intersect_principal(f);
  bigger.monoid_part = bigger.monoid_part - vec({1, 1});
  const auto rb = intersection_oracle_check(alg, f, opt, bigger);
  CHECK_FALSE(rb.pass);
  CHECK(rb.counterexample.has_value());
  auto smaller = alg.intersect_principal(f);
  smaller.monoid_part = smaller.monoid_part + vec({1, 1});
  const auto rs = intersection_oracle_check(alg, f, opt, smaller);
  CHECK_FALSE(rs.pass);
  REQUIRE(rs.counterexample.has_value());
  CHECK(alg.is_member_DS(alg.mul(f, *rs.counterexample)));
  // and a wrong domain part
  auto wrong = alg.intersect_principal(f);
  wrong.domain_part = DivisorD{{two, 1}};
  CHECK_FALSE(intersection_oracle_check(alg, f, opt, wrong).pass);
}

TEST_CASE("intersection oracle on random elements of both algebras") {
  std::mt19937_64 rng(99);
  IntersectionCheckOptions opt;
  opt.samples = 200;
  for (const MonoidAlgebra& alg : {z_n0(), z_pm12()}) {
    for (int i = 0; i < 10; ++i) {
      const AlgebraElem f = random_elem(alg, rng, 3, 2, 8);
      opt.seed = 1000 + i;
      const auto r = intersection_oracle_check(alg, f, opt);
      CHECK_MESSAGE(r.pass, alg.to_string(f) << ": " << r.failure);
      CHECK(r.hits > 0);
    }
  }
}

TEST_CASE("intersection oracle is reproducible for a seed") {
  const MonoidAlgebra alg = z_pm12();
  const AlgebraElem f = poly(alg, {{3, vec({1, 0, 0})}, {Rat(1, 2), vec({0, -1, 1})}});
  IntersectionCheckOptions opt;
  opt.seed = 5;
  const auto a = intersection_oracle_check(alg, f, opt);
  const auto b = intersection_oracle_check(alg, f, opt);
  CHECK(a.hits == b.hits);
  CHECK(a.inside == b.inside);
}
