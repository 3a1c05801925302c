#include "krull/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "krull/errors.hpp"

namespace krull {

IntVec zero_vec(std::size_t n) { return IntVec(n, Int(0)); }

IntVec unit_vec(std::size_t n, std::size_t i) {
  IntVec v(n, Int(0));
  v.at(i) = 1;
  return v;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec operator-(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVec operator*(const Int& s, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(std::span<const Int> v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool dominates(std::span<const Int> a, std::span<const Int> b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

IntVec componentwise_min(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
  return r;
}

Int l1_norm(std::span<const Int> v) {
  Int s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

std::string to_string(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// ---- IntMat ----------------------------------------------------------------

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("IntMat::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
  IntMat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error("IntMat::from_columns: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMat::row(std::size_t i) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVec IntMat::col(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVec> IntMat::columns() const {
  std::vector<IntVec> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
  return out;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVec IntMat::apply(std::span<const Int> v) const {
  assert(v.size() == cols_);
  IntVec r(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

void IntMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMat::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMat::add_row(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMat::add_col(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMat::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  assert(a.cols() == b.rows());
  IntMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMat& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? "; " : "") << to_string(m.row(i));
  return os << ']';
}

// ---- Smith normal form -----------------------------------------------------

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& x : diagonal())
    if (x != 0) ++r;
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

namespace {

Int trunc_div(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm snf(const IntMat& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMat a = m;
  IntMat u = IntMat::identity(rows);
  IntMat v = IntMat::identity(cols);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero |entry| in the trailing block
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (pi == rows || abs(a(i, j)) < abs(a(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) goto done;  // block is zero
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Int q = trunc_div(a(i, t), a(t, t));
        a.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Int q = trunc_div(a(t, j), a(t, t));
        a.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: pivot must divide the whole trailing block
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row(t, i, Int(1));
            u.add_row(t, i, Int(1));
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
done:
  return SmithForm{std::move(u), std::move(a), std::move(v)};
}

// ---- Hermite normal form ---------------------------------------------------

IntMat hnf_rows(const IntMat& m) {
  IntMat a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t p = 0;
  for (std::size_t c = 0; c < cols && p < rows; ++c) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = p; i < rows; ++i)
        if (a(i, c) != 0 && (best == rows || abs(a(i, c)) < abs(a(best, c)))) best = i;
      if (best == rows) break;
      a.swap_rows(p, best);
      bool done = true;
      for (std::size_t i = p + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        a.add_row(i, p, -floor_div(a(i, c), a(p, c)));
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(p, c) == 0) continue;
    if (a(p, c) < 0) a.negate_row(p);
    for (std::size_t i = 0; i < p; ++i) a.add_row(i, p, -floor_div(a(i, c), a(p, c)));
    ++p;
  }
  IntMat out(p, cols);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return out;
}

IntMat kernel_basis(const IntMat& m) {
  const SmithForm s = snf(m);
  const std::size_t r = s.rank();
  const std::size_t n = m.cols();
  std::vector<IntVec> rows;
  for (std::size_t j = r; j < n; ++j) rows.push_back(s.V.col(j));
  if (rows.empty()) return IntMat(n, 0);
  return hnf_rows(IntMat::from_rows(rows, n)).transpose();
}

std::size_t rank(const IntMat& m) { return snf(m).rank(); }

Int determinant(const IntMat& m) {
  if (m.rows() != m.cols()) throw Error("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<IntVec> lattice_coordinates(const IntMat& basis, std::span<const Int> x) {
  if (x.size() != basis.rows()) throw Error("lattice_coordinates: dimension mismatch");
  const SmithForm s = snf(basis);
  const std::size_t k = basis.cols();
  if (s.rank() != k) throw Error("lattice_coordinates: basis columns are dependent");
  const IntVec ux = s.U.apply(x);
  IntVec y(k);
  for (std::size_t i = 0; i < ux.size(); ++i) {
    if (i < k) {
      if (ux[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = ux[i] / s.D(i, i);
    } else if (ux[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(y);
}

// ---- height ----------------------------------------------------------------

Int gcd_of_vector(std::span<const Int> v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw PreconditionError("nonzero-vector", "gcd of the zero vector is undefined");
  return g;
}

bool is_height_zero(std::span<const Int> v) {
  if (is_zero(v))
    throw PreconditionError("nonzero-vector", "0 is divisible by every prime; height is undefined");
  return gcd_of_vector(v) == 1;
}

IntMat split_basis_by_functional(const IntVec& w, const IntVec& a) {
  if (w.size() != a.size()) throw Error("split_basis_by_functional: dimension mismatch");
  const Int value = dot(w, a);
  if (value != 1)
    throw PreconditionError("functional-value-one",
                            "<w,a> = " + value.get_str() + ", expected 1");
  const std::size_t n = w.size();
  const IntMat ker = kernel_basis(IntMat::from_rows({w}, n));
  std::vector<IntVec> cols = ker.columns();
  cols.push_back(a);
  return IntMat::from_columns(cols, n);
}

// ---- total orders ----------------------------------------------------------

TotalOrderSpec::TotalOrderSpec(std::vector<IntVec> basis) : basis_(std::move(basis)) {
  const std::size_t n = basis_.size();
  for (const auto& b : basis_)
    if (b.size() != n)
      throw PreconditionError("order-basis-square", "order basis must have n vectors of length n");
  if (n > 0 && determinant(IntMat::from_rows(basis_, n)) == 0)
    throw PreconditionError("order-basis-independent", "order basis vectors are dependent");
}

TotalOrderSpec TotalOrderSpec::standard(std::size_t n) {
  std::vector<IntVec> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vec(n, i));
  return TotalOrderSpec(std::move(b));
}

int TotalOrderSpec::compare(std::span<const Int> x, std::span<const Int> y) const {
  for (const auto& b : basis_) {
    const int c = cmp(dot(b, x), dot(b, y));
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

// ---- class groups ----------------------------------------------------------

IntVec ClassGroupDesc::reduce(IntVec coords) const {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Int& d = invariant_factors.at(i);
    if (d != 0) {
      Int r;
      mpz_fdiv_r(r.get_mpz_t(), coords[i].get_mpz_t(), d.get_mpz_t());
      coords[i] = r;
    }
  }
  return coords;
}

IntVec ClassGroupDesc::classify(std::span<const Int> x) const {
  if (invariant_factors.empty()) return {};
  return reduce(projection.apply(x));
}

// ---- integer helpers -------------------------------------------------------

long padic_valuation(const Int& n, const Int& p) {
  if (n == 0) throw PreconditionError("nonzero", "valuation of 0");
  Int m = n;
  long v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

long padic_valuation(const Rat& q, const Int& p) {
  return padic_valuation(q.get_num(), p) - padic_valuation(q.get_den(), p);
}

std::vector<std::pair<Int, long>> factor_trial(Int n, const Int& bound) {
  n = abs(n);
  if (n == 0) throw PreconditionError("nonzero", "cannot factor 0");
  std::vector<std::pair<Int, long>> out;
  Int p = 2;
  while (p * p <= n) {
    if (p > bound)
      throw ExhaustedError("unfactorable at desk scale: cofactor " + n.get_str() +
                           " has no prime factor <= " + bound.get_str());
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      long e = 0;
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (n > bound)
      throw ExhaustedError("unfactorable at desk scale: prime factor " + n.get_str() +
                           " exceeds bound " + bound.get_str());
    out.emplace_back(n, 1);
  }
  return out;
}

bool is_prime(const Int& n) { return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

Int next_prime(const Int& n) {
  Int r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::vector<Int> positive_divisors(const Int& n, const Int& bound) {
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : factor_trial(n, bound)) {
    const std::size_t base = divs.size();
    Int pk = 1;
    for (long k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::optional<Int> sqrt_mod_prime(const Int& a_in, const Int& p) {
  Int a;
  mpz_fdiv_r(a.get_mpz_t(), a_in.get_mpz_t(), p.get_mpz_t());
  if (a == 0) return Int(0);
  if (p == 2) return a;
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  // Tonelli-Shanks
  Int q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Int c, r, t, e;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  unsigned long mexp = s;
  while (t != 1) {
    unsigned long i = 0;
    Int tt = t;
    while (tt != 1) {
      tt = (tt * tt) % p;
      ++i;
    }
    Int b = c;
    for (unsigned long j = 0; j + i + 1 < mexp; ++j) b = (b * b) % p;
    r = (r * b) % p;
    c = (b * b) % p;
    t = (t * c) % p;
    mexp = i;
  }
  return r;
}

}  // namespace krull
