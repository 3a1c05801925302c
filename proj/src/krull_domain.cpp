#include "krull/krull_domain.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "krull/errors.hpp"

namespace krull {

// ---- DomainInstance --------------------------------------------------------

DomainInstance DomainInstance::integers() { return DomainInstance{DomainKind::Integers, 0}; }

DomainInstance DomainInstance::rationals() { return DomainInstance{DomainKind::RationalField, 0}; }

DomainInstance DomainInstance::quadratic(const Int& d) {
  if (d >= 0) throw PreconditionError("negative-d", "Z[sqrt d] requires d < 0, got " + d.get_str());
  Int m;
  mpz_fdiv_r_ui(m.get_mpz_t(), d.get_mpz_t(), 4);
  if (m != 2 && m != 3)
    throw PreconditionError("d-mod-4", "d must be 2 or 3 mod 4 so that Z[sqrt d] is maximal");
  for (const auto& [p, e] : factor_trial(d, kDefaultFactorBound))
    if (e > 1) throw PreconditionError("squarefree-d", "d is not squarefree");
  return DomainInstance{DomainKind::Quadratic, d};
}

std::string DomainInstance::name() const {
  switch (kind) {
    case DomainKind::Integers: return "Z";
    case DomainKind::RationalField: return "Q";
    case DomainKind::Quadratic: return "Z[sqrt(" + d.get_str() + ")]";
  }
  return "?";
}

// ---- FieldElem -------------------------------------------------------------

FieldElem::FieldElem(const Rat& re, const Rat& im, const Int& d) : re_(re), im_(im), d_(d) {
  re_.canonicalize();
  im_.canonicalize();
  if (d_ == 0 && im_ != 0) throw Error("FieldElem: irrational part without a field");
}

FieldElem field_elem(const DomainInstance& dom, const Rat& re, const Rat& im) {
  return FieldElem(re, im, dom.is_quadratic() ? dom.d : Int(0));
}

namespace {

Int join_d(const FieldElem& x, const FieldElem& y) {
  if (x.d() == y.d()) return x.d();
  if (x.d() == 0) return y.d();
  if (y.d() == 0) return x.d();
  if (x.is_rational() && y.is_rational()) return x.d();
  throw Error("FieldElem: mixing Q(sqrt " + x.d().get_str() + ") and Q(sqrt " + y.d().get_str() + ")");
}

}  // namespace

bool FieldElem::is_integral() const {
  return re_.get_den() == 1 && im_.get_den() == 1;
}

Int FieldElem::common_denominator() const { return lcm(re_.get_den(), im_.get_den()); }

FieldElem FieldElem::conj() const { return FieldElem(re_, -im_, d_); }

Rat FieldElem::norm() const { return re_ * re_ - Rat(d_) * im_ * im_; }

FieldElem FieldElem::operator-() const { return FieldElem(-re_, -im_, d_); }

FieldElem operator+(const FieldElem& x, const FieldElem& y) {
  return FieldElem(x.re_ + y.re_, x.im_ + y.im_, join_d(x, y));
}

FieldElem operator-(const FieldElem& x, const FieldElem& y) {
  return FieldElem(x.re_ - y.re_, x.im_ - y.im_, join_d(x, y));
}

FieldElem operator*(const FieldElem& x, const FieldElem& y) {
  const Int d = join_d(x, y);
  Rat re = x.re_ * y.re_ + Rat(d) * x.im_ * y.im_;
  Rat im = x.re_ * y.im_ + x.im_ * y.re_;
  return FieldElem(re, im, d);
}

FieldElem operator/(const FieldElem& x, const FieldElem& y) {
  if (y.is_zero()) throw PreconditionError("nonzero-divisor", "division by zero");
  const Rat n = y.norm();
  FieldElem t = x * y.conj();
  return FieldElem(t.re_ / n, t.im_ / n, t.d_);
}

std::string FieldElem::to_string() const {
  std::ostringstream os;
  if (im_ == 0) {
    os << re_;
  } else {
    if (re_ != 0) os << re_ << (im_ > 0 ? "+" : "");
    os << im_ << "*sqrt(" << d_ << ")";
  }
  return os.str();
}

// ---- PrimePlace / divisors -------------------------------------------------

std::string PrimePlace::to_string() const {
  switch (kind) {
    case PrimeKind::Rational: return "(" + p.get_str() + ")";
    case PrimeKind::Inert: return "(" + p.get_str() + ")inert";
    case PrimeKind::Ramified:
    case PrimeKind::Split:
      return "(" + p.get_str() + ", sqrt(d)-" + root.get_str() + ")";
  }
  return "?";
}

std::string to_string(const DivisorD& div) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [P, e] : div) {
    os << (first ? "" : ", ") << P.to_string() << "^" << e;
    first = false;
  }
  os << '}';
  return os.str();
}

// ---- FracIdealD ------------------------------------------------------------

FracIdealD FracIdealD::from_parts(const Rat& scalar, const Int& a, const Int& b, const Int& c) {
  if (scalar <= 0 || a <= 0 || c <= 0) throw Error("FracIdealD: non-canonical parts");
  Int g = gcd(gcd(a, b), c);
  FracIdealD I;
  I.a_ = a / g;
  I.b_ = b / g;
  I.c_ = c / g;
  I.scalar_ = scalar * Rat(g);
  I.scalar_.canonicalize();
  return I;
}

std::vector<FieldElem> FracIdealD::generators(const DomainInstance& dom) const {
  switch (dom.kind) {
    case DomainKind::RationalField: return {FieldElem(1)};
    case DomainKind::Integers: return {FieldElem(scalar_)};
    case DomainKind::Quadratic:
      return {FieldElem(scalar_ * Rat(a_), 0, dom.d),
              FieldElem(scalar_ * Rat(b_), scalar_ * Rat(c_), dom.d)};
  }
  return {};
}

std::string FracIdealD::to_string(const DomainInstance& dom) const {
  std::ostringstream os;
  if (dom.kind == DomainKind::Quadratic)
    os << scalar_ << "*<" << a_ << ", " << b_ << "+" << c_ << "*sqrt(" << dom.d << ")>";
  else if (dom.kind == DomainKind::Integers)
    os << "(" << scalar_ << ")";
  else
    os << "K";
  return os.str();
}

namespace {

// Canonical ideal generated by integral elements u + w sqrt d.
FracIdealD lattice_ideal(const Int& d, const Rat& scalar,
                         const std::vector<std::pair<Int, Int>>& integral) {
  std::vector<IntVec> rows;
  for (const auto& [u, w] : integral) {
    rows.push_back({w, u});      // alpha       in coordinates (sqrt d, 1)
    rows.push_back({u, w * d});  // alpha*sqrt d
  }
  const IntMat h = hnf_rows(IntMat::from_rows(rows, 2));
  if (h.rows() != 2) throw Error("lattice_ideal: generators do not span a full lattice");
  return FracIdealD::from_parts(scalar, h(1, 1), h(0, 1), h(0, 0));
}

long ramification(const PrimePlace& P) { return P.kind == PrimeKind::Ramified ? 2 : 1; }

}  // namespace

FracIdealD v_closure_d(const DomainInstance& dom, const std::vector<FieldElem>& gens) {
  std::vector<FieldElem> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  if (nz.empty()) throw PreconditionError("nonzero-generator", "all generators are zero");
  switch (dom.kind) {
    case DomainKind::RationalField: return FracIdealD();
    case DomainKind::Integers: {
      Int den = 1;
      for (const auto& g : nz) {
        if (!g.is_rational()) throw Error("v_closure_d: irrational generator over Z");
        den = lcm(den, g.re().get_den());
      }
      Int num = 0;
      for (const auto& g : nz) num = gcd(num, g.re().get_num() * (den / g.re().get_den()));
      return FracIdealD::from_parts(Rat(num, den), 1, 0, 1);
    }
    case DomainKind::Quadratic: {
      Int den = 1;
      for (const auto& g : nz) den = lcm(den, g.common_denominator());
      std::vector<std::pair<Int, Int>> integral;
      for (const auto& g : nz) {
        Rat u = g.re() * Rat(den);
        Rat w = g.im() * Rat(den);
        integral.emplace_back(u.get_num(), w.get_num());
      }
      return lattice_ideal(dom.d, Rat(1, den), integral);
    }
  }
  return FracIdealD();
}

FracIdealD principal_ideal(const DomainInstance& dom, const FieldElem& x) {
  return v_closure_d(dom, {x});
}

FracIdealD ideal_v_mul(const DomainInstance& dom, const FracIdealD& I, const FracIdealD& J) {
  switch (dom.kind) {
    case DomainKind::RationalField: return FracIdealD();
    case DomainKind::Integers: return FracIdealD::from_parts(I.scalar() * J.scalar(), 1, 0, 1);
    case DomainKind::Quadratic: {
      std::vector<FieldElem> prods;
      for (const auto& x : I.generators(dom))
        for (const auto& y : J.generators(dom)) prods.push_back(x * y);
      return v_closure_d(dom, prods);
    }
  }
  return FracIdealD();
}

FracIdealD ideal_conjugate(const DomainInstance& dom, const FracIdealD& I) {
  if (dom.kind != DomainKind::Quadratic) return I;
  std::vector<FieldElem> gens;
  for (const auto& g : I.generators(dom)) gens.push_back(g.conj());
  return v_closure_d(dom, gens);
}

FracIdealD ideal_inverse_d(const DomainInstance& dom, const FracIdealD& I) {
  switch (dom.kind) {
    case DomainKind::RationalField: return FracIdealD();
    case DomainKind::Integers: return FracIdealD::from_parts(1 / I.scalar(), 1, 0, 1);
    case DomainKind::Quadratic: {
      // (sL)^{-1} = conj(L) / (s N(L))
      const FracIdealD lat = FracIdealD::from_parts(1, I.a(), I.b(), I.c());
      const FracIdealD bar = ideal_conjugate(dom, lat);
      return FracIdealD::from_parts(bar.scalar() / (I.scalar() * Rat(I.lattice_norm())), bar.a(),
                                    bar.b(), bar.c());
    }
  }
  return FracIdealD();
}

bool ideal_contains(const DomainInstance& dom, const FracIdealD& I, const FieldElem& x) {
  if (x.is_zero()) return true;
  switch (dom.kind) {
    case DomainKind::RationalField: return true;
    case DomainKind::Integers:
      return x.is_rational() && Rat(x.re() / I.scalar()).get_den() == 1;
    case DomainKind::Quadratic: {
      const FieldElem y = x / FieldElem(I.scalar());
      if (!y.is_integral()) return false;
      const Int u = y.re().get_num();
      const Int w = y.im().get_num();
      if (w % I.c() != 0) return false;
      return (u - (w / I.c()) * I.b()) % I.a() == 0;
    }
  }
  return false;
}

std::optional<FieldElem> principal_generator(const DomainInstance& dom, const FracIdealD& I) {
  switch (dom.kind) {
    case DomainKind::RationalField: return FieldElem(1);
    case DomainKind::Integers: return FieldElem(I.scalar());
    case DomainKind::Quadratic: {
      // alpha = u + y c sqrt d in L with N(alpha) = N(L), u = x a + y b
      const Int n = I.lattice_norm();
      const Int absd = abs(dom.d);
      const Int step = absd * I.c() * I.c();
      for (Int y = 0; step * y * y <= n; ++y) {
        for (int sgn : {1, -1}) {
          if (y == 0 && sgn == -1) continue;
          const Int yy = sgn * y;
          const Int rem = n - step * y * y;
          if (!mpz_perfect_square_p(rem.get_mpz_t())) continue;
          const Int root = sqrt(rem);
          for (const Int& u : {root, Int(-root)}) {
            if ((u - yy * I.b()) % I.a() != 0) continue;
            return FieldElem(I.scalar() * Rat(u), I.scalar() * Rat(yy * I.c()), dom.d);
          }
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---- primes and valuations -------------------------------------------------

std::vector<PrimePlace> primes_above(const DomainInstance& dom, const Int& p) {
  if (!is_prime(p)) throw PreconditionError("prime", p.get_str() + " is not prime");
  switch (dom.kind) {
    case DomainKind::RationalField: return {};
    case DomainKind::Integers: return {PrimePlace{p, PrimeKind::Rational, 0}};
    case DomainKind::Quadratic: {
      if (p == 2) {
        Int r;
        mpz_fdiv_r_ui(r.get_mpz_t(), dom.d.get_mpz_t(), 2);
        return {PrimePlace{p, PrimeKind::Ramified, r}};
      }
      if (dom.d % p == 0) return {PrimePlace{p, PrimeKind::Ramified, 0}};
      const auto rho = sqrt_mod_prime(dom.d, p);
      if (!rho) return {PrimePlace{p, PrimeKind::Inert, 0}};
      Int r1 = *rho;
      Int r2 = p - r1;
      if (r2 < r1) std::swap(r1, r2);
      return {PrimePlace{p, PrimeKind::Split, r1}, PrimePlace{p, PrimeKind::Split, r2}};
    }
  }
  return {};
}

void check_prime_place(const DomainInstance& dom, const PrimePlace& P) {
  const auto above = primes_above(dom, P.p);
  if (std::find(above.begin(), above.end(), P) == above.end())
    throw PreconditionError("prime-place", P.to_string() + " is not a height-one prime of " + dom.name());
}

FracIdealD prime_ideal(const DomainInstance& dom, const PrimePlace& P) {
  check_prime_place(dom, P);
  switch (P.kind) {
    case PrimeKind::Rational:
    case PrimeKind::Inert: return FracIdealD::from_parts(Rat(P.p), 1, 0, 1);
    case PrimeKind::Ramified:
    case PrimeKind::Split: {
      Int b;
      Int neg = -P.root;
      mpz_fdiv_r(b.get_mpz_t(), neg.get_mpz_t(), P.p.get_mpz_t());
      return FracIdealD::from_parts(1, P.p, b, 1);
    }
  }
  return FracIdealD();
}

namespace {

// v_P(u + w sqrt d) for integral nonzero input, P split or ramified.
long integral_valuation(const Int& d, Int u, Int w, const PrimePlace& P) {
  const Int& p = P.p;
  const Int& rho = P.root;
  long k = 0;
  // multiplying by (rho + sqrt d)/p lowers v_P by one and keeps integrality
  while ((u + w * rho) % p == 0) {
    Int nu = u * rho + w * d;
    Int nw = u + w * rho;
    if (nu % p != 0 || nw % p != 0) throw Error("integral_valuation: lost integrality");
    u = nu / p;
    w = nw / p;
    ++k;
  }
  return k;
}

}  // namespace

long valuation_d(const DomainInstance& dom, const FieldElem& x, const PrimePlace& P) {
  if (x.is_zero()) throw PreconditionError("nonzero", "valuation of 0");
  if (dom.is_field()) throw PreconditionError("domain-has-primes", "a field has no height-one primes");
  if (P.kind == PrimeKind::Rational) {
    if (!x.is_rational()) throw Error("valuation_d: irrational element over Z");
    return padic_valuation(x.re(), P.p);
  }
  const Int den = x.common_denominator();
  const Int u = Rat(x.re() * Rat(den)).get_num();
  const Int w = Rat(x.im() * Rat(den)).get_num();
  const long vden = ramification(P) * padic_valuation(den, P.p);
  if (P.kind == PrimeKind::Inert) return padic_valuation(Int(gcd(u, w)), P.p) - vden;
  return integral_valuation(dom.d, u, w, P) - vden;
}

long valuation_d(const DomainInstance& dom, const FracIdealD& I, const PrimePlace& P) {
  if (dom.is_field()) throw PreconditionError("domain-has-primes", "a field has no height-one primes");
  long vs = ramification(P) * padic_valuation(I.scalar(), P.p);
  if (dom.kind == DomainKind::Integers) return vs;
  const long v1 = valuation_d(dom, FieldElem(Rat(I.a()), 0, dom.d), P);
  const long v2 = valuation_d(dom, FieldElem(Rat(I.b()), Rat(I.c()), dom.d), P);
  return vs + std::min(v1, v2);
}

DivisorD divisor_of(const DomainInstance& dom, const FracIdealD& I) {
  DivisorD div;
  if (dom.is_field()) return div;
  std::set<Int> ps;
  for (const Int& n : {Int(I.scalar().get_num()), Int(I.scalar().get_den()), I.lattice_norm()})
    for (const auto& [p, e] : factor_trial(n, dom.factor_bound)) ps.insert(p);
  for (const auto& p : ps)
    for (const auto& P : primes_above(dom, p))
      if (long v = valuation_d(dom, I, P); v != 0) div[P] = v;
  return div;
}

DivisorD divisor_of(const DomainInstance& dom, const FieldElem& x) {
  return divisor_of(dom, principal_ideal(dom, x));
}

FracIdealD ideal_from_divisor(const DomainInstance& dom, const DivisorD& div) {
  FracIdealD I;
  if (dom.is_field()) {
    if (!div.empty()) throw PreconditionError("domain-has-primes", "a field has no height-one primes");
    return I;
  }
  for (const auto& [P, e] : div) {
    const FracIdealD Pi = prime_ideal(dom, P);
    const FracIdealD f = e >= 0 ? Pi : ideal_inverse_d(dom, Pi);
    for (long k = 0; k < std::abs(e); ++k) I = ideal_v_mul(dom, I, f);
  }
  return I;
}

// ---- class group -----------------------------------------------------------

namespace {

bool equivalent(const DomainInstance& dom, const FracIdealD& I, const FracIdealD& J) {
  return principal_generator(dom, ideal_v_mul(dom, I, ideal_conjugate(dom, J))).has_value();
}

FracIdealD primitive_part(const FracIdealD& I) {
  return FracIdealD::from_parts(1, I.a(), I.b(), I.c());
}

constexpr std::size_t kMaxClassReps = 4096;

}  // namespace

DomainClassGroup::DomainClassGroup(DomainInstance dom) : dom_(std::move(dom)) {
  if (dom_.kind != DomainKind::Quadratic) {
    reps_.emplace_back(FracIdealD(), IntVec{});
    return;
  }
  // Minkowski bound (4/pi) sqrt|d|, tested as N^2 pi^2 <= 16|d| with a lower
  // bound for pi, so the generator list can only grow.
  const Int pi_num = 314159;
  const Int pi_den = 100000;
  const Int rhs = 16 * abs(dom_.d) * pi_den * pi_den;
  auto below = [&](const Int& norm) { return norm * norm * pi_num * pi_num <= rhs; };
  for (Int p = 2; below(p); p = next_prime(p))
    for (const auto& P : primes_above(dom_, p))
      if (below(P.kind == PrimeKind::Inert ? Int(p * p) : p)) gens_.push_back(P);

  const std::size_t k = gens_.size();
  std::vector<FracIdealD> gen_ideals;
  for (const auto& P : gens_) gen_ideals.push_back(prime_ideal(dom_, P));

  reps_.emplace_back(FracIdealD(), zero_vec(k));
  std::vector<IntVec> relations;
  for (std::size_t j = 0; j < reps_.size(); ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      const FracIdealD J = primitive_part(ideal_v_mul(dom_, reps_[j].first, gen_ideals[i]));
      const IntVec w = reps_[j].second + unit_vec(k, i);
      bool found = false;
      for (std::size_t r = 0; r < reps_.size(); ++r)
        if (equivalent(dom_, J, reps_[r].first)) {
          relations.push_back(w - reps_[r].second);
          found = true;
          break;
        }
      if (!found) {
        if (reps_.size() >= kMaxClassReps)
          throw ExhaustedError("class group enumeration bound exceeded for " + dom_.name());
        reps_.emplace_back(J, w);
      }
    }
  }
  if (k == 0) return;
  const SmithForm s = snf(IntMat::from_rows(relations, k));
  if (s.rank() != k) throw Error("class group relation lattice is not of full rank");
  const IntMat vt = s.V.transpose();
  std::vector<IntVec> proj_rows;
  for (std::size_t i = 0; i < k; ++i) {
    if (s.D(i, i) == 1) continue;
    desc_.invariant_factors.push_back(s.D(i, i));
    proj_rows.push_back(vt.row(i));
  }
  desc_.projection = IntMat::from_rows(proj_rows, k);
}

IntVec DomainClassGroup::class_of(const FracIdealD& I) const {
  if (dom_.kind != DomainKind::Quadratic) return {};
  const FracIdealD prim = primitive_part(I);
  for (const auto& [rep, w] : reps_)
    if (equivalent(dom_, prim, rep)) return desc_.classify(w);
  throw Error("class_of: ideal matches no class representative");
}

IntVec DomainClassGroup::class_of(const DivisorD& div) const {
  return class_of(ideal_from_divisor(dom_, div));
}

DomainClassGroup class_group_d(const DomainInstance& dom) { return DomainClassGroup(dom); }

// ---- approximation ---------------------------------------------------------

FieldElem approximate_element(const DomainInstance& dom, const DivisorD& targets) {
  if (dom.is_field()) {
    if (!targets.empty()) throw PreconditionError("domain-has-primes", "a field has no height-one primes");
    return FieldElem(1);
  }
  for (const auto& [P, e] : targets) check_prime_place(dom, P);
  if (dom.kind == DomainKind::Integers) {
    Rat x = 1;
    for (const auto& [P, e] : targets) {
      Int pe;
      mpz_pow_ui(pe.get_mpz_t(), P.p.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
      x *= e >= 0 ? Rat(pe) : Rat(1, pe);
    }
    x.canonicalize();
    return FieldElem(x);
  }

  const FracIdealD T = ideal_from_divisor(dom, targets);
  const Int absd = abs(dom.d);
  const Int step = absd * T.c() * T.c();
  auto matches = [&](const FieldElem& x) {
    for (const auto& [P, e] : targets)
      if (valuation_d(dom, x, P) != e) return false;
    return true;
  };
  Int prev = -1;
  Int bound = T.lattice_norm();
  for (int round = 0; round < 24; ++round, prev = bound, bound *= 4) {
    // (norm, |y|, |u|, y<0, u<0, u, y)
    std::vector<std::tuple<Int, Int, Int, bool, bool, Int, Int>> pts;
    for (Int y = 0; step * y * y <= bound; ++y) {
      for (int sgn : {1, -1}) {
        if (y == 0 && sgn == -1) continue;
        const Int yy = sgn * y;
        const Int U = sqrt(Int(bound - step * y * y));
        const Int lo = -floor_div(U + yy * T.b(), T.a());  // ceil((-U - yb)/a)
        const Int hi = floor_div(U - yy * T.b(), T.a());
        for (Int x = lo; x <= hi; ++x) {
          const Int u = x * T.a() + yy * T.b();
          const Int norm = u * u + step * yy * yy;
          if (norm <= prev || norm > bound || norm == 0) continue;
          pts.emplace_back(norm, abs(yy), abs(u), yy < 0, u < 0, u, yy);
        }
      }
    }
    std::sort(pts.begin(), pts.end());
    for (const auto& pt : pts) {
      const FieldElem x(T.scalar() * Rat(std::get<5>(pt)), T.scalar() * Rat(std::get<6>(pt) * T.c()),
                        dom.d);
      if (matches(x)) return x;
    }
  }
  throw ExhaustedError("approximate_element: lattice-point search bound exceeded for targets " +
                       to_string(targets));
}

// ---- two-generation --------------------------------------------------------

bool verify_two_generators(const DomainInstance& dom, const FracIdealD& I, const TwoGenerators& t) {
  if (t.a.is_zero() || t.b.is_zero()) return false;
  return v_closure_d(dom, {t.a, t.b}) == ideal_inverse_d(dom, I) &&
         valuation_d(dom, t.a / t.b, t.P) == 1;
}

namespace {

// Height-one primes in increasing order of the rational prime below them,
// skipping `avoid`.
class FreshPrimeScan {
 public:
  FreshPrimeScan(const DomainInstance& dom, std::set<PrimePlace> avoid)
      : dom_(dom), avoid_(std::move(avoid)) {}

  PrimePlace next() {
    for (;;) {
      if (idx_ < pending_.size()) {
        const PrimePlace P = pending_[idx_++];
        if (!avoid_.count(P)) return P;
        continue;
      }
      p_ = next_prime(p_);
      if (p_ > dom_.factor_bound)
        throw ExhaustedError("two_generators_for: no further factorable primes at desk scale");
      pending_ = primes_above(dom_, p_);
      idx_ = 0;
    }
  }

 private:
  const DomainInstance& dom_;
  std::set<PrimePlace> avoid_;
  Int p_ = 1;
  std::vector<PrimePlace> pending_;
  std::size_t idx_ = 0;
};

long lookup(const DivisorD& div, const PrimePlace& P) {
  auto it = div.find(P);
  return it == div.end() ? 0 : it->second;
}

}  // namespace

std::vector<TwoGenerators> two_generators_for(const DomainInstance& dom, const FracIdealD& I,
                                                  std::size_t m) {
  if (dom.is_field()) throw PreconditionError("domain-not-field", "D = K has no height-one primes");
  if (m == 0) throw PreconditionError("count-positive", "m must be at least 1");
  const FracIdealD inv = ideal_inverse_d(dom, I);
  std::vector<TwoGenerators> out;

  if (const auto gen = principal_generator(dom, inv)) {
    // I^{-1} = (b): a = b * (uniformizer of a fresh P)
    const FieldElem b = *gen;
    std::set<PrimePlace> avoid;
    for (const auto& [P, e] : divisor_of(dom, b)) avoid.insert(P);
    FreshPrimeScan scan(dom, avoid);
    while (out.size() < m) {
      const PrimePlace P = scan.next();
      const FieldElem pi = approximate_element(dom, DivisorD{{P, 1}});
      out.push_back({b * pi, b, P});
    }
  } else {
    const auto gens = inv.generators(dom);
    FieldElem a0 = gens.at(0);
    FieldElem b = gens.at(1);
    DivisorD da = divisor_of(dom, a0);
    DivisorD db = divisor_of(dom, b);
    std::set<PrimePlace> support;
    for (const auto& [P, e] : da) support.insert(P);
    for (const auto& [P, e] : db) support.insert(P);

    std::optional<PrimePlace> split;
    for (const auto& P : support)
      if (lookup(da, P) != lookup(db, P)) {
        split = P;
        break;
      }
    if (!split) throw Error("two_generators_for: non-principal ideal with equal generator valuations");
    if (lookup(da, *split) < lookup(db, *split)) {
      std::swap(a0, b);
      std::swap(da, db);
    }
    DivisorD targets;
    for (const auto& Q : support) targets[Q] = lookup(da, Q);
    targets[*split] = lookup(db, *split) + 1;
    out.push_back({approximate_element(dom, targets), b, *split});

    FreshPrimeScan scan(dom, support);
    while (out.size() < m) {
      const PrimePlace P = scan.next();
      DivisorD t;
      for (const auto& Q : support) t[Q] = lookup(da, Q);
      t[P] = 1;
      out.push_back({approximate_element(dom, t), b, P});
    }
  }

  for (const auto& t : out)
    if (!verify_two_generators(dom, I, t))
      throw Error("two_generators_for: emitted triple failed re-verification at " + t.P.to_string());
  return out;
}

}  // namespace krull
