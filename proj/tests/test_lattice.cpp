#include <random>

#include "doctest.h"
#include "krull/errors.hpp"
#include "krull/lattice.hpp"

using namespace krull;

namespace {

IntMat mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVec> r;
  std::size_t cols = 0;
  for (auto row : rows) {
    IntVec v;
    for (long x : row) v.emplace_back(x);
    cols = v.size();
    r.push_back(v);
  }
  return IntMat::from_rows(r, cols);
}

IntVec vec(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

IntMat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

bool is_diagonal_chain(const IntMat& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (d(i, i) < 0) return false;
    if (d(i, i) == 0) {
      if (d(i + 1, i + 1) != 0) return false;
    } else if (d(i + 1, i + 1) % d(i, i) != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("snf of diag(2,3) has invariant factors 1, 6") {
  // by hand: gcd(2,3) = 1 and 2*3 = 6
  const SmithForm s = snf(mat({{2, 0}, {0, 3}}));
  CHECK(s.diagonal() == vec({1, 6}));
  CHECK(s.U * mat({{2, 0}, {0, 3}}) * s.V == s.D);
}

TEST_CASE("snf of zero and identity matrices") {
  const IntMat z(2, 3);
  const SmithForm s = snf(z);
  CHECK(s.D == z);
  CHECK(s.U == IntMat::identity(2));
  CHECK(s.V == IntMat::identity(3));

  const SmithForm t = snf(IntMat::identity(3));
  CHECK(t.D == IntMat::identity(3));
}

TEST_CASE("snf property: U M V = D, unimodular transforms, divisor chain") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t r = 1 + rng() % 4;
    const std::size_t c = 1 + rng() % 4;
    const IntMat m = random_matrix(rng, r, c, -9, 9);
    const SmithForm s = snf(m);
    REQUIRE(s.U * m * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(is_diagonal_chain(s.D));
  }
}

TEST_CASE("snf is deterministic") {
  const IntMat m = mat({{4, 6, 2}, {-3, 9, 12}});
  const SmithForm a = snf(m);
  const SmithForm b = snf(m);
  CHECK(a.U == b.U);
  CHECK(a.V == b.V);
  CHECK(a.D == b.D);
}

TEST_CASE("kernel of the weight row (-2,-1,1,2)") {
  const IntMat w = mat({{-2, -1, 1, 2}});
  const IntMat k = kernel_basis(w);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 3);
  CHECK(is_zero((w * k).row(0)));
  CHECK(rank(k) == 3);
  // saturated: all invariant factors 1
  for (const auto& d : snf(k).diagonal()) CHECK(d == 1);

  // brute force: every kernel vector in a box is an integer combination
  int found = 0;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c)
        for (long d = -3; d <= 3; ++d) {
          if (-2 * a - b + c + 2 * d != 0) continue;
          ++found;
          CHECK(lattice_coordinates(k, vec({a, b, c, d})).has_value());
        }
  CHECK(found > 100);
}

TEST_CASE("kernel edge cases") {
  CHECK(kernel_basis(IntMat::identity(3)).cols() == 0);
  const IntMat k = kernel_basis(IntMat(1, 2));
  CHECK(k == IntMat::identity(2));
  // canonical sign: (1,1), not (-1,-1)
  CHECK(kernel_basis(mat({{-1, 1}})) == mat({{1}, {1}}));
}

TEST_CASE("kernel property: saturated basis of the full kernel") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 60; ++iter) {
    const IntMat m = random_matrix(rng, 1 + rng() % 2, 3 + rng() % 2, -4, 4);
    const IntMat k = kernel_basis(m);
    CHECK(k.cols() == m.cols() - rank(m));
    for (std::size_t j = 0; j < k.cols(); ++j) CHECK(is_zero(m.apply(k.col(j))));
    for (const auto& d : snf(k).diagonal()) CHECK(d == 1);
  }
}

TEST_CASE("hnf rows is canonical") {
  const IntMat a = hnf_rows(mat({{2, 4}, {1, 3}}));
  const IntMat b = hnf_rows(mat({{1, 3}, {3, 7}}));
  CHECK(a == b);
  CHECK(a == mat({{1, 1}, {0, 2}}));
}

TEST_CASE("determinant by Bareiss") {
  CHECK(determinant(mat({{1, 2}, {3, 4}})) == -2);
  CHECK(determinant(mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 5}})) == -5);
  CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("gcd_of_vector and height") {
  CHECK(gcd_of_vector(vec({3, 6})) == 3);
  CHECK(gcd_of_vector(vec({1, 1})) == 1);
  CHECK(gcd_of_vector(vec({4, 6, 9})) == 1);
  CHECK_FALSE(is_height_zero(vec({2, 4})));
  CHECK(is_height_zero(vec({1, 0, 0})));
  CHECK(is_height_zero(vec({6, 10, 15})));
  CHECK_THROWS_AS(gcd_of_vector(vec({0, 0})), PreconditionError);
  CHECK_THROWS_AS(is_height_zero(vec({0, 0, 0})), PreconditionError);
}

namespace {

long det2(long a, long b, long c, long d) { return a * d - b * c; }

long det3(const long v[3], const long x[3], const long y[3]) {
  return v[0] * det2(x[1], x[2], y[1], y[2]) - v[1] * det2(x[0], x[2], y[0], y[2]) +
         v[2] * det2(x[0], x[1], y[0], y[1]);
}

}  // namespace

TEST_CASE("height zero iff extendable to a basis (enumerated completions, n <= 3)") {
  // n = 2
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      if (a == 0 && b == 0) continue;
      bool completes = false;
      for (long c = -3; c <= 3 && !completes; ++c)
        for (long d = -3; d <= 3; ++d)
          if (std::abs(det2(a, b, c, d)) == 1) {
            completes = true;
            break;
          }
      CHECK(is_height_zero(vec({a, b})) == completes);
    }
  // n = 3
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        const long v[3] = {a, b, c};
        bool completes = false;
        for (long i = 0; i < 125 && !completes; ++i) {
          const long x[3] = {i % 5 - 2, (i / 5) % 5 - 2, i / 25 - 2};
          for (long j = 0; j < 125; ++j) {
            const long y[3] = {j % 5 - 2, (j / 5) % 5 - 2, j / 25 - 2};
            if (std::abs(det3(v, x, y)) == 1) {
              completes = true;
              break;
            }
          }
        }
        CHECK(is_height_zero(vec({a, b, c})) == completes);
      }
}

TEST_CASE("split_basis_by_functional") {
  {
    const IntMat b = split_basis_by_functional(vec({1}), vec({1}));
    CHECK(b == mat({{1}}));
  }
  for (const auto& [w, a] : std::vector<std::pair<IntVec, IntVec>>{
           {vec({1, 1}), vec({1, 0})}, {vec({2, 3}), vec({-1, 1})}, {vec({1, 2, 3}), vec({0, -1, 1})}}) {
    const IntMat b = split_basis_by_functional(w, a);
    CHECK(abs(determinant(b)) == 1);
    CHECK(b.col(b.cols() - 1) == a);
    for (std::size_t j = 0; j + 1 < b.cols(); ++j) CHECK(dot(w, b.col(j)) == 0);
  }
  CHECK_THROWS_AS(split_basis_by_functional(vec({2, 4}), vec({1, 0})), PreconditionError);
}

TEST_CASE("total order laws: antisymmetric, transitive, total, translation invariant") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> dist(-5, 5);
  const TotalOrderSpec std3 = TotalOrderSpec::standard(3);
  const TotalOrderSpec skew({vec({1, 1, 0}), vec({0, 1, -1}), vec({2, 0, 1})});
  auto rnd = [&] { return vec({dist(rng), dist(rng), dist(rng)}); };
  for (const TotalOrderSpec* ord : {&std3, &skew}) {
    for (int i = 0; i < 300; ++i) {
      const IntVec x = rnd(), y = rnd(), z = rnd();
      CHECK(ord->compare(x, y) == -ord->compare(y, x));
      CHECK((ord->compare(x, y) == 0) == (x == y));
      if (ord->less(x, y) && ord->less(y, z)) CHECK(ord->less(x, z));
      CHECK(ord->compare(x, y) == ord->compare(x + z, y + z));
    }
  }
  CHECK_THROWS_AS(TotalOrderSpec({vec({1, 0}), vec({2, 0})}), PreconditionError);
}

TEST_CASE("lattice_coordinates") {
  const IntMat b = mat({{2, 1}, {0, 3}});
  const auto c = lattice_coordinates(b, vec({3, 3}));
  REQUIRE(c.has_value());
  CHECK(b.apply(*c) == vec({3, 3}));
  CHECK_FALSE(lattice_coordinates(b, vec({1, 0})).has_value());
}

TEST_CASE("integer helpers") {
  CHECK(padic_valuation(Int(12), Int(2)) == 2);
  CHECK(padic_valuation(Rat(3, 4), Int(2)) == -2);
  const auto f = factor_trial(Int(360), Int(100));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<Int, long>(2, 3));
  CHECK(f[2] == std::pair<Int, long>(5, 1));
  CHECK_THROWS_AS(factor_trial(Int(1009) * 1013, Int(100)), ExhaustedError);
  CHECK(positive_divisors(Int(-12), Int(100)) == vec({1, 2, 3, 4, 6, 12}));
  for (long p : {3L, 5L, 7L, 13L, 29L, 97L}) {
    for (long a = 1; a < p; ++a) {
      const auto r = sqrt_mod_prime(Int(a), Int(p));
      bool residue = false;
      for (long x = 0; x < p; ++x)
        if ((x * x) % p == a) residue = true;
      CHECK(r.has_value() == residue);
      if (r) CHECK((*r * *r - a) % p == 0);
    }
  }
}
