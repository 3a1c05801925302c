#pragma once

// Exact integer and rational arithmetic, integer matrices and the lattice
// algorithms (Smith/Hermite normal forms, kernels, coordinates) that the
// rest of the library is built on. No floating point.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace krull {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

IntVec zero_vec(std::size_t n);
IntVec unit_vec(std::size_t n, std::size_t i);
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec operator*(const Int& s, const IntVec& a);
Int dot(std::span<const Int> a, std::span<const Int> b);
bool is_zero(std::span<const Int> v);
// componentwise a >= b
bool dominates(std::span<const Int> a, std::span<const Int> b);
IntVec componentwise_min(const IntVec& a, const IntVec& b);
Int l1_norm(std::span<const Int> v);
std::string to_string(std::span<const Int> v);

class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static IntMat from_columns(const std::vector<IntVec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  std::vector<IntVec> columns() const;
  IntMat transpose() const;
  IntVec apply(std::span<const Int> v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& k);
  void add_col(std::size_t dst, std::size_t src, const Int& k);
  void negate_row(std::size_t i);

  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend bool operator==(const IntMat& a, const IntMat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMat& m);

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., d_i >= 0.
struct SmithForm {
  IntMat U;
  IntMat D;
  IntMat V;

  std::vector<Int> diagonal() const;
  std::size_t rank() const;
};

// Pivots on the smallest nonzero absolute value; output is deterministic.
SmithForm snf(const IntMat& m);

// Row Hermite normal form of the lattice spanned by the rows of `m`:
// echelon, positive pivots, entries above a pivot reduced into [0, pivot).
// Zero rows are dropped, so the result has rank(m) rows.
IntMat hnf_rows(const IntMat& m);

// Columns form the canonical (Hermite) Z-basis of ker(m : Z^cols -> Z^rows).
IntMat kernel_basis(const IntMat& m);

std::size_t rank(const IntMat& m);

// Fraction-free Bareiss elimination.
Int determinant(const IntMat& m);

// Coordinates c with basis * c = x, where the columns of `basis` are
// linearly independent. nullopt when x is not in their Z-span.
std::optional<IntVec> lattice_coordinates(const IntMat& basis, std::span<const Int> x);

// Throws PreconditionError on the zero vector.
Int gcd_of_vector(std::span<const Int> v);

// True iff v is divisible in Z^n by no prime, i.e. gcd of entries is 1.
bool is_height_zero(std::span<const Int> v);

// Z-basis of Z^n (columns) whose last column is `a` and whose other columns
// span ker(x -> <w, x>). Requires <w, a> = 1.
IntMat split_basis_by_functional(const IntVec& w, const IntVec& a);

// Lexicographic comparison of exponents through an ordered list of
// functionals. Linear independence makes it total; linearity makes it
// translation invariant.
class TotalOrderSpec {
 public:
  explicit TotalOrderSpec(std::vector<IntVec> basis);
  static TotalOrderSpec standard(std::size_t n);

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<IntVec>& basis() const { return basis_; }

  // -1, 0, 1
  int compare(std::span<const Int> x, std::span<const Int> y) const;
  bool less(std::span<const Int> x, std::span<const Int> y) const {
    return compare(x, y) < 0;
  }

  friend bool operator==(const TotalOrderSpec&, const TotalOrderSpec&) = default;

 private:
  std::vector<IntVec> basis_;
};

// Invariant-factor description of a finitely generated abelian group
// together with a linear projection onto it. invariant_factors never holds
// a 1; a 0 stands for a copy of Z.
struct ClassGroupDesc {
  std::vector<Int> invariant_factors;
  IntMat projection;

  // canonical class coordinates of projection * x
  IntVec classify(std::span<const Int> x) const;
  IntVec reduce(IntVec coords) const;
  bool is_trivial() const { return invariant_factors.empty(); }
  IntVec identity() const { return zero_vec(invariant_factors.size()); }
};

// ---- integer helpers -----------------------------------------------------

// Exponent of the prime p in n != 0.
long padic_valuation(const Int& n, const Int& p);
long padic_valuation(const Rat& q, const Int& p);

// Prime factorization of |n| by trial division. Throws ExhaustedError when a
// prime factor exceeds `bound`.
std::vector<std::pair<Int, long>> factor_trial(Int n, const Int& bound);

bool is_prime(const Int& n);
Int next_prime(const Int& n);

// All positive divisors of |n|, ascending; n != 0.
std::vector<Int> positive_divisors(const Int& n, const Int& bound);

// Square root of a modulo an odd prime p, if a is a quadratic residue.
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p);

Int floor_div(const Int& a, const Int& b);

}  // namespace krull
