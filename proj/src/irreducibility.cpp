#include "krull/irreducibility.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "krull/errors.hpp"

namespace krull {

std::string to_string(CertKind k) {
  switch (k) {
    case CertKind::Binomial: return "binomial";
    case CertKind::Eisenstein: return "eisenstein";
    case CertKind::MonomialSum: return "monomial-sum";
    case CertKind::OracleVerified: return "oracle";
  }
  return "?";
}

std::string to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::Irreducible: return "irreducible";
    case OracleVerdict::Reducible: return "reducible";
    case OracleVerdict::Unit: return "unit";
    case OracleVerdict::Unknown: return "unknown";
  }
  return "?";
}

namespace {

const char* kEisensteinAssumption =
    "leading coefficient a P-unit, the other coefficients in P D_P and the trailing one of P-valuation 1, "
    "under a total order compatible with G: then f is prime in D_P[G], and K[G] is the localization of "
    "D_P[G] at the nonzero constants";

TranscriptStep step(std::string clause, std::string value, bool ok) {
  return TranscriptStep{std::move(clause), std::move(value), ok};
}

// ---- transcripts, recomputed from the element and the witnesses ------------

std::vector<TranscriptStep> binomial_steps(const MonoidAlgebra& alg, const IrreducibilityCertificate& c) {
  std::vector<TranscriptStep> s;
  if (!c.a || !c.b || !c.exponent) {
    s.push_back(step("witnesses", "missing", false));
    return s;
  }
  s.push_back(step("a-nonzero", c.a->to_string(), !c.a->is_zero()));
  s.push_back(step("b-nonzero", c.b->to_string(), !c.b->is_zero()));
  const bool nonzero_g = !is_zero(*c.exponent);
  s.push_back(step("exponent-nonzero", to_string(*c.exponent), nonzero_g));
  if (!nonzero_g) return s;
  const Int g = gcd_of_vector(*c.exponent);
  s.push_back(step("height-zero", "gcd=" + g.get_str(), g == 1));
  if (!c.a->is_zero() && !c.b->is_zero()) {
    const AlgebraElem e = alg.add(alg.constant(*c.a), alg.monomial(*c.b, *c.exponent));
    s.push_back(step("element-shape", "a + b X^g", e == c.element));
  }
  return s;
}

std::vector<TranscriptStep> eisenstein_steps(const MonoidAlgebra& alg, const IrreducibilityCertificate& c) {
  std::vector<TranscriptStep> s;
  const DomainInstance& dom = alg.domain();
  if (!c.prime || dom.is_field()) {
    s.push_back(step("prime", dom.is_field() ? "coefficient ring is a field" : "missing", false));
    return s;
  }
  const PrimePlace& P = *c.prime;
  bool valid_prime = true;
  try {
    check_prime_place(dom, P);
  } catch (const PreconditionError&) {
    valid_prime = false;
  }
  s.push_back(step("prime", P.to_string(), valid_prime));
  if (!valid_prime) return s;
  const auto& t = c.element.terms;
  s.push_back(step("term-count", std::to_string(t.size()), t.size() >= 2));
  s.push_back(step("sorted", "exponents strictly increasing", alg.is_normalized(c.element)));
  if (t.size() < 2) return s;
  const long lead = valuation_d(dom, t.back().coeff, P);
  s.push_back(step("leading-unit", "v_P=" + std::to_string(lead), lead == 0));
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    const long v = valuation_d(dom, t[i].coeff, P);
    s.push_back(step("interior-divisible", "term " + std::to_string(i) + " v_P=" + std::to_string(v), v >= 1));
  }
  const long trail = valuation_d(dom, t.front().coeff, P);
  s.push_back(step("trailing-valuation", "v_P=" + std::to_string(trail), trail == 1));
  return s;
}

std::vector<TranscriptStep> monomial_sum_steps(const MonoidAlgebra& alg, const IrreducibilityCertificate& c) {
  std::vector<TranscriptStep> s;
  const ExponentGroup& grp = alg.group();
  if (!grp.has_monoid() || !c.sum_shift || !c.monoid_prime || c.sum_exponents.empty()) {
    s.push_back(step("witnesses", grp.has_monoid() ? "missing" : "exponent group has no prime divisors", false));
    return s;
  }
  const std::size_t P = *c.monoid_prime;
  s.push_back(step("prime", std::to_string(P), P < grp.num_primes()));
  if (P >= grp.num_primes()) return s;
  for (std::size_t i = 0; i < c.sum_exponents.size(); ++i) {
    const Int v = grp.divisor(c.sum_exponents[i]).at(P);
    s.push_back(step("v_P(g)", "g_" + std::to_string(i + 1) + " v_P=" + v.get_str(), v == 0));
  }
  const IntVec ea = grp.divisor(*c.sum_shift);
  s.push_back(step("a-in-monoid", to_string(ea), grp.in_monoid(*c.sum_shift)));
  s.push_back(step("v_P(a)", ea.at(P).get_str(), ea.at(P) == 1));
  std::vector<IntVec> exps = c.sum_exponents;
  exps.push_back(c.sum_exponents.back() + *c.sum_shift);
  std::vector<IntVec> sorted = exps;
  std::sort(sorted.begin(), sorted.end());
  const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  s.push_back(step("distinct-exponents", std::to_string(exps.size()), distinct));
  std::vector<Term> terms;
  for (const auto& e : exps) terms.push_back(Term{e, alg.coeff(1)});
  s.push_back(step("element-shape", "X^g_1 + ... + X^g_n + X^(g_n + a)", alg.make(terms) == c.element));
  return s;
}

std::vector<TranscriptStep> steps_for(const MonoidAlgebra& alg, const IrreducibilityCertificate& c) {
  switch (c.kind) {
    case CertKind::Binomial: return binomial_steps(alg, c);
    case CertKind::Eisenstein: return eisenstein_steps(alg, c);
    case CertKind::MonomialSum: return monomial_sum_steps(alg, c);
    case CertKind::OracleVerified: {
      const OracleResult r = kronecker_irreducible_oracle(alg, c.element);
      return {step("oracle", to_string(r.verdict), r.verdict == OracleVerdict::Irreducible)};
    }
  }
  return {};
}

void finish(const MonoidAlgebra& alg, IrreducibilityCertificate& c) {
  c.transcript = steps_for(alg, c);
  for (const auto& s : c.transcript)
    if (!s.ok) throw PreconditionError(s.clause, to_string(c.kind) + " certificate rejected: " + s.value);
}

}  // namespace

IrreducibilityCertificate binomial_certificate(const MonoidAlgebra& alg, const FieldElem& a, const FieldElem& b,
                                              const IntVec& g) {
  if (a.is_zero()) throw PreconditionError("a-nonzero", "a = 0");
  if (b.is_zero()) throw PreconditionError("b-nonzero", "b = 0");
  if (g.size() != alg.group().rank()) throw PreconditionError("exponent-length", "exponent has wrong length");
  if (is_zero(g)) throw PreconditionError("exponent-nonzero", "g = 0");
  IrreducibilityCertificate c;
  c.kind = CertKind::Binomial;
  c.a = field_elem(alg.domain(), a.re(), a.im());
  c.b = field_elem(alg.domain(), b.re(), b.im());
  c.exponent = g;
  c.element = alg.add(alg.constant(a), alg.monomial(b, g));
  finish(alg, c);
  return c;
}

IrreducibilityCertificate eisenstein_certificate(const MonoidAlgebra& alg, const AlgebraElem& f, const PrimePlace& P) {
  if (alg.domain().is_field()) throw PreconditionError("domain-has-primes", "a field has no height-one primes");
  IrreducibilityCertificate c;
  c.kind = CertKind::Eisenstein;
  c.element = f;
  c.prime = P;
  c.assumption = kEisensteinAssumption;
  finish(alg, c);
  return c;
}

IrreducibilityCertificate monomial_sum_certificate(const MonoidAlgebra& alg, const std::vector<IntVec>& gs,
                                             const IntVec& a, std::size_t P) {
  if (!alg.group().has_monoid()) throw PreconditionError("monoid", "exponent group has no prime divisors");
  if (gs.empty()) throw PreconditionError("nonempty", "no exponents g_i");
  IrreducibilityCertificate c;
  c.kind = CertKind::MonomialSum;
  c.sum_exponents = gs;
  c.sum_shift = a;
  c.monoid_prime = P;
  std::vector<Term> terms;
  for (const auto& g : gs) terms.push_back(Term{g, alg.coeff(1)});
  terms.push_back(Term{gs.back() + a, alg.coeff(1)});
  c.element = alg.make(terms);
  finish(alg, c);
  return c;
}

bool reverify_certificate(const MonoidAlgebra& alg, const IrreducibilityCertificate& cert) {
  if (!alg.is_normalized(cert.element)) return false;
  std::vector<TranscriptStep> fresh;
  try {
    fresh = steps_for(alg, cert);
  } catch (const Error&) {
    return false;
  }
  if (fresh != cert.transcript) return false;
  return std::all_of(fresh.begin(), fresh.end(), [](const TranscriptStep& s) { return s.ok; });
}

// ---- univariate Kronecker factoring -----------------------------------------

namespace {

void trim(UPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

long degree(const UPoly& u) { return static_cast<long>(u.size()) - 1; }

Int eval(const UPoly& u, const Int& x) {
  Int r = 0;
  for (auto it = u.rbegin(); it != u.rend(); ++it) r = r * x + *it;
  return r;
}

UPoly pmul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// exact quotient a / b over Z
std::optional<UPoly> pdiv(UPoly a, const UPoly& b) {
  const long db = degree(b);
  if (db < 0) throw Error("division by the zero polynomial");
  if (degree(a) < db) {
    trim(a);
    if (a.empty()) return UPoly{};
    return std::nullopt;
  }
  UPoly q(a.size() - b.size() + 1, Int(0));
  for (long k = degree(a) - db; k >= 0; --k) {
    const Int& top = a[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    const Int c = top / b.back();
    q[k] = c;
    for (long i = 0; i <= db; ++i) a[k + i] -= c * b[i];
  }
  trim(a);
  if (!a.empty()) return std::nullopt;
  trim(q);
  return q;
}

Int content(const UPoly& u) {
  Int g = 0;
  for (const auto& c : u) g = gcd(g, c);
  return g;
}

UPoly normalize_sign(UPoly u) {
  if (!u.empty() && u.back() < 0)
    for (auto& c : u) c = -c;
  return u;
}

// Integer polynomial of degree <= s through (x_k, y_k), if one exists.
std::optional<UPoly> interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rat> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - j]);
      if (i == j) break;
    }
  // Horner on the Newton form
  std::vector<Rat> poly{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<Rat> next(poly.size() + 1, Rat(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * Rat(xs[k]);
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  UPoly out;
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(c.get_num());
  }
  trim(out);
  return out;
}

const Int kDivisorBound("1000000000000000");

}  // namespace

std::optional<UPoly> kronecker_find_factor(const UPoly& u_in, long min_degree, long max_attempts) {
  UPoly u = u_in;
  trim(u);
  const long n = degree(u);
  if (n < 2) return std::nullopt;
  min_degree = std::max(min_degree, 1L);
  if (u[0] == 0) return UPoly{Int(0), Int(1)};  // y divides u

  // candidate evaluation points: small |x|, fewest divisors first
  struct Point {
    Int x, y;
    std::vector<Int> divs;
  };
  std::vector<Point> pts;
  for (long k = 0; static_cast<long>(pts.size()) < n + 6 && k <= 4 * n + 8; ++k) {
    for (int side = 0; side < (k == 0 ? 1 : 2); ++side) {
      const long x = side ? -k : k;
      const Int y = eval(u, Int(x));
      if (y == 0) {
        if (min_degree > 1) throw Error("kronecker_find_factor: root missed by an earlier search");
        return UPoly{Int(-x), Int(1)};
      }
      try {
        pts.push_back(Point{Int(x), y, positive_divisors(abs(y), kDivisorBound)});
      } catch (const ExhaustedError&) {
      }
    }
  }
  std::stable_sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.divs.size() < b.divs.size(); });

  long attempts = 0;
  for (long s = min_degree; 2 * s <= n; ++s) {
    if (static_cast<long>(pts.size()) < s + 1) throw ExhaustedError("kronecker: not enough evaluation points");
    std::vector<Int> xs, ys(s + 1);
    for (long k = 0; k <= s; ++k) xs.push_back(pts[k].x);
    std::optional<UPoly> found;
    std::function<bool(long)> rec = [&](long k) -> bool {
      if (k > s) {
        if (++attempts > max_attempts) throw ExhaustedError("kronecker: attempt budget exhausted");
        auto g = interpolate(xs, ys);
        if (!g || degree(*g) != s) return false;
        if (pdiv(u, *g)) {
          found = normalize_sign(*g);
          return true;
        }
        return false;
      }
      for (const auto& d : pts[k].divs)
        for (int sign : {1, -1}) {
          if (k == 0 && sign < 0) continue;  // factors up to sign
          ys[k] = sign * d;
          bool ok = true;
          for (long j = 0; j < k && ok; ++j)
            ok = mpz_divisible_p(Int(ys[k] - ys[j]).get_mpz_t(), Int(xs[k] - xs[j]).get_mpz_t());
          if (ok && rec(k + 1)) return true;
        }
      return false;
    };
    if (rec(0)) return found;
  }
  return std::nullopt;
}

std::vector<UPoly> kronecker_factor(const UPoly& u_in, long max_attempts) {
  UPoly u = u_in;
  trim(u);
  if (u.empty()) throw PreconditionError("nonzero", "factoring the zero polynomial");
  const Int c = content(u);
  for (auto& x : u) x /= c;
  u = normalize_sign(u);
  std::vector<UPoly> out;
  long min_deg = 1;
  while (degree(u) >= 2 * min_deg) {
    auto g = kronecker_find_factor(u, min_deg, max_attempts);
    if (!g) break;
    out.push_back(*g);
    u = normalize_sign(*pdiv(u, *g));
    min_deg = degree(*g);
  }
  if (degree(u) >= 1) out.push_back(u);
  return out;
}

// ---- multivariate oracle ----------------------------------------------------------

namespace {

using MPoly = std::map<IntVec, Int>;

MPoly mmul(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

// undo y = x_1^{B_1} ... x_n^{B_n}
MPoly inverse_substitution(const UPoly& u, const std::vector<long>& radix) {
  MPoly r;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] == 0) continue;
    IntVec e;
    long rest = static_cast<long>(k);
    for (long base : radix) {
      e.emplace_back(rest % base);
      rest /= base;
    }
    r[e] += u[k];
  }
  return r;
}

}  // namespace

OracleResult kronecker_irreducible_oracle(const MonoidAlgebra& alg, const AlgebraElem& f, const OracleCaps& caps) {
  OracleResult res;
  if (f.is_zero()) throw PreconditionError("nonzero", "oracle on the zero element");
  if (alg.domain().is_quadratic()) {
    res.reason = "not applicable: coefficients in a quadratic field";
    return res;
  }
  if (f.size() == 1) {
    res.verdict = OracleVerdict::Unit;
    res.normalized_degree = 0;
    res.reason = "a nonzero scalar times a monomial";
    return res;
  }
  const std::size_t n = alg.group().rank();
  IntVec lo = f.terms.front().exp, hi = lo;
  Int den = 1;
  for (const auto& t : f.terms) {
    lo = componentwise_min(lo, t.exp);
    for (std::size_t i = 0; i < n; ++i) hi[i] = std::max(hi[i], t.exp[i]);
    den = lcm(den, t.coeff.re().get_den());
  }
  MPoly F;
  Int cont = 0;
  for (const auto& t : f.terms) {
    const Int c = Rat(t.coeff.re() * Rat(den)).get_num();
    F[t.exp - lo] = c;
    cont = gcd(cont, c);
  }
  for (auto& [e, c] : F) {
    c /= cont;
    if (abs(c) > caps.max_coefficient) {
      res.reason = "coefficient height above cap";
      return res;
    }
  }
  std::vector<long> radix;
  long N = 0, B = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const long Di = Int(hi[i] - lo[i]).get_si();
    N += Di * B;
    B *= Di + 1;
    radix.push_back(Di + 1);
    if (N > caps.max_degree) break;
  }
  res.normalized_degree = N;
  if (N > caps.max_degree) {
    res.reason = "normalized degree above cap";
    return res;
  }
  UPoly u(N + 1, Int(0));
  for (const auto& [e, c] : F) {
    long k = 0, base = 1;
    for (std::size_t i = 0; i < n; ++i) {
      k += e[i].get_si() * base;
      base *= radix[i];
    }
    u[k] += c;
  }
  std::vector<UPoly> facs;
  try {
    facs = kronecker_factor(u, caps.max_attempts);
  } catch (const ExhaustedError& e) {
    res.reason = e.what();
    return res;
  }
  const std::size_t k = facs.size();
  for (std::uint64_t mask = 1; k >= 2 && mask + 1 < (std::uint64_t(1) << k); ++mask) {
    UPoly g{Int(1)};
    for (std::size_t j = 0; j < k; ++j)
      if (mask >> j & 1) g = pmul(g, facs[j]);
    const auto h = pdiv(u, g);
    if (!h) continue;
    const MPoly G = inverse_substitution(g, radix);
    const MPoly H = inverse_substitution(*h, radix);
    if (mmul(G, H) != F) continue;
    // f = (cont / den) X^lo G H
    std::vector<Term> tg, th;
    for (const auto& [e, c] : G) tg.push_back(Term{e + lo, alg.coeff(Rat(c * cont, den))});
    for (const auto& [e, c] : H) th.push_back(Term{e, alg.coeff(Rat(c))});
    res.factors = {alg.make(tg), alg.make(th)};
    if (alg.mul(res.factors[0], res.factors[1]) != f) throw Error("oracle: lifted factors do not multiply back");
    res.verdict = OracleVerdict::Reducible;
    res.reason = "split found by recombining univariate factors";
    return res;
  }
  res.verdict = OracleVerdict::Irreducible;
  res.reason = std::to_string(k) + " univariate factor(s), no multivariate split";
  return res;
}

}  // namespace krull
