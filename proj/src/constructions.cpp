#include "krull/constructions.hpp"

#include <algorithm>
#include <functional>

#include "krull/errors.hpp"

namespace krull {

namespace {

IntVec target_monoid_class(const MonoidAlgebra& alg, const std::optional<IntVec>& t) {
  if (!t || !alg.group().has_monoid()) return {};
  return alg.monoid_class(*t);
}

PrimeDivisorCertificate finalize(const MonoidAlgebra& alg, IrreducibilityCertificate irr, const FracIdealD& I,
                                 const std::optional<IntVec>& t) {
  PrimeDivisorCertificate c;
  c.element = irr.element;
  c.irreducibility = std::move(irr);
  c.intersection = alg.intersect_principal(c.element);
  c.target_domain_class = alg.domain_class(I);
  c.target_monoid_class = target_monoid_class(alg, t);
  c.verified = c.intersection.domain_class == c.target_domain_class &&
               c.intersection.monoid_class == c.target_monoid_class;
  if (!c.verified)
    throw Error("constructed element " + alg.to_string(c.element) + " is not in the requested class");
  return c;
}

void require_free_group(const MonoidAlgebra& alg) {
  if (alg.group().has_monoid())
    throw PreconditionError("free-exponent-group", "this construction works in D[G] with G = Z^n");
}

// Lattice coordinates of rank n with L1 norm rho, lexicographically ascending.
void for_each_sphere_point(std::size_t n, long rho, const std::function<bool(const IntVec&)>& fn) {
  IntVec cur(n, Int(0));
  std::function<bool(std::size_t, long)> rec = [&](std::size_t i, long left) -> bool {
    if (i + 1 == n) {
      if (left == 0) {
        cur[i] = 0;
        return fn(cur);
      }
      cur[i] = -left;
      if (!fn(cur)) return false;
      cur[i] = left;
      return fn(cur);
    }
    for (long x = -left; x <= left; ++x) {
      cur[i] = x;
      if (!rec(i + 1, left - std::abs(x))) return false;
    }
    return true;
  };
  rec(0, rho);
}

}  // namespace

std::vector<PrimeDivisorCertificate> construct_shifted_binomials(const MonoidAlgebra& alg, const FracIdealD& I,
                                                         const IntVec& alpha, std::size_t m) {
  require_free_group(alg);
  if (m == 0) throw PreconditionError("count-positive", "m must be >= 1");
  if (alpha.size() != alg.group().rank()) throw PreconditionError("exponent-length", "alpha has wrong length");
  if (alg.order().compare(alpha, zero_vec(alpha.size())) <= 0)
    throw PreconditionError("alpha-positive", "alpha must be > 0 under the active order");
  std::vector<PrimeDivisorCertificate> out;
  for (const auto& tg : two_generators_for(alg.domain(), I, m)) {
    const AlgebraElem g = alg.add(alg.constant(tg.a / tg.b), alg.monomial(alg.coeff(1), alpha));
    out.push_back(finalize(alg, eisenstein_certificate(alg, g, tg.P), I, std::nullopt));
  }
  return out;
}

std::vector<IntVec> height_zero_exponents(std::size_t n, std::size_t count) {
  std::vector<IntVec> out;
  if (n == 0) return out;
  for (long rho = 1; out.size() < count; ++rho) {
    if (n == 1 && rho > 1) break;
    std::vector<IntVec> shell;
    for_each_sphere_point(n, rho, [&](const IntVec& v) {
      auto first = std::find_if(v.begin(), v.end(), [](const Int& x) { return x != 0; });
      if (first != v.end() && *first > 0 && gcd_of_vector(v) == 1) shell.push_back(v);
      return true;
    });
    std::sort(shell.begin(), shell.end(), std::greater<>());
    for (auto& v : shell) {
      if (out.size() == count) break;
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<PrimeDivisorCertificate> construct_height_zero_binomials(const MonoidAlgebra& alg, const FracIdealD& I,
                                                              std::size_t m) {
  require_free_group(alg);
  if (m == 0) throw PreconditionError("count-positive", "m must be >= 1");
  const std::size_t n = alg.group().rank();
  const TwoGenerators tg = two_generators_for(alg.domain(), I, 1).front();
  std::vector<IntVec> exps = height_zero_exponents(n, m);
  if (n == 1) exps.push_back(IntVec{Int(-1)});
  std::vector<PrimeDivisorCertificate> out;
  std::vector<AlgebraElem> seen;
  for (const auto& g : exps) {
    if (out.size() == m) break;
    auto irr = binomial_certificate(alg, tg.a, tg.b, g);
    if (std::any_of(seen.begin(), seen.end(), [&](const AlgebraElem& f) { return associated(f, irr.element); }))
      continue;
    seen.push_back(irr.element);
    out.push_back(finalize(alg, std::move(irr), I, std::nullopt));
  }
  if (out.size() < m)
    throw PreconditionError("rank-too-small", "Z^" + std::to_string(n) + " yields only " + std::to_string(out.size()) +
                                                  " pairwise non-associated elements a + bX^g");
  return out;
}

ValuationOneBasis valuation_one_basis(const BlockMonoid& M, long atom_bound) {
  if (M.lattice_rank() == 0) throw PreconditionError("nontrivial-monoid", "B(G0) has only the zero element");
  const auto atoms = enumerate_atoms(M, atom_bound);
  for (std::size_t i = 0; i < M.num_primes(); ++i)
    for (const auto& atom : atoms) {
      if (atom[i] != 1) continue;
      ValuationOneBasis out;
      out.prime = i;
      out.a = M.coordinates(atom);
      out.basis = split_basis_by_functional(M.lattice_basis().row(i), out.a);
      return out;
    }
  throw ExhaustedError("valuation_one_basis: no atom of valuation 1 within bound " + std::to_string(atom_bound));
}

FieldCaseOutcome construct_field_case(const MonoidAlgebra& alg, const IntVec& t, std::size_t m, long bound) {
  if (!alg.domain().is_field()) throw PreconditionError("coefficient-field", "this construction works in K[S]");
  if (!alg.group().has_monoid()) throw PreconditionError("monoid", "exponent group has no prime divisors");
  const BlockMonoid& M = alg.group().monoid();
  FieldCaseOutcome out;
  out.requested = m;
  const auto gen_divs = generators_of_divisor(M, ideal_inverse_s(t), bound);
  std::vector<IntVec> gens;
  for (const auto& x : gen_divs) gens.push_back(M.coordinates(x));
  std::sort(gens.begin(), gens.end(), [&](const IntVec& x, const IntVec& y) { return alg.order().less(x, y); });
  const auto candidates = enumerate_elements(M, bound);
  std::size_t avoiding = 0;
  for (std::size_t P : avoiding_primes(M, gen_divs)) {
    if (out.certificates.size() == m) break;
    ++avoiding;
    // first a with v_P(a) = 1 whose element is new up to units; two primes
    // may share their smallest such a
    for (const auto& x : candidates) {
      if (x[P] != 1) continue;
      auto irr = monomial_sum_certificate(alg, gens, M.coordinates(x), P);
      if (std::any_of(out.certificates.begin(), out.certificates.end(),
                      [&](const PrimeDivisorCertificate& c) { return associated(c.element, irr.element); }))
        continue;
      out.certificates.push_back(finalize(alg, std::move(irr), FracIdealD(), t));
      break;
    }
  }
  out.achieved = out.certificates.size();
  if (out.achieved < m)
    out.note = "insufficient avoiding primes: " + std::to_string(out.achieved) + " of " + std::to_string(m) +
               " built (" + std::to_string(avoiding) + " prime divisor(s) avoid the generators of J^{-1})";
  return out;
}

std::vector<PrimeDivisorCertificate> construct_in_class(const MonoidAlgebra& alg, const FracIdealD& I,
                                                       const IntVec& t, std::size_t m, long bound) {
  if (alg.domain().is_field()) throw PreconditionError("domain-not-field", "D = K: use the field construction");
  if (!alg.group().has_monoid()) throw PreconditionError("monoid", "S = G: use the group-algebra constructions");
  const BlockMonoid& M = alg.group().monoid();
  if (m == 0) return {};
  const TwoGenerators tg = two_generators_for(alg.domain(), I, 1).front();
  const FieldElem p = tg.a / tg.b;
  const IntVec tinv = ideal_inverse_s(t);

  std::vector<IntVec> gens;
  for (const auto& x : generators_of_divisor(M, tinv, bound)) gens.push_back(M.coordinates(x));
  // a single exponent would give a unit, so the first certificate may need extras
  const std::size_t pad = gens.size() >= 2 ? 0 : 2 - gens.size();
  const std::size_t need = m - 1 + pad;
  std::vector<IntVec> extras;
  for (long rho = 0; rho <= bound && extras.size() < need; ++rho)
    for_each_sphere_point(M.lattice_rank(), rho, [&](const IntVec& c) {
      if (ideal_contains_s(tinv, M.divisor(c)) && std::find(gens.begin(), gens.end(), c) == gens.end())
        extras.push_back(c);
      return extras.size() < need;
    });
  if (extras.size() < need) throw ExhaustedError("J^{-1} generator scan exhausted within bound " + std::to_string(bound));

  std::vector<PrimeDivisorCertificate> out;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<IntVec> exps = gens;
    exps.insert(exps.end(), extras.begin(), extras.begin() + static_cast<long>(k + pad));
    const IntVec h = *std::max_element(exps.begin(), exps.end(),
                                       [&](const IntVec& x, const IntVec& y) { return alg.order().less(x, y); });
    std::vector<Term> terms;
    for (const auto& e : exps) terms.push_back(Term{e, e == h ? alg.coeff(1) : p});
    out.push_back(finalize(alg, eisenstein_certificate(alg, alg.make(terms), tg.P), I, t));
  }
  return out;
}

bool verify_prime_divisor_class(const MonoidAlgebra& alg, const PrimeDivisorCertificate& cert, const FracIdealD& I,
                                const std::optional<IntVec>& t) {
  const PrincipalIntersectionRep rep = alg.intersect_principal(cert.element);
  return rep.domain_class == alg.domain_class(I) && rep.monoid_class == target_monoid_class(alg, t);
}

bool reverify_prime_divisor(const MonoidAlgebra& alg, const PrimeDivisorCertificate& cert, const FracIdealD& I,
                            const std::optional<IntVec>& t) {
  if (!(cert.irreducibility.element == cert.element)) return false;
  if (!reverify_certificate(alg, cert.irreducibility)) return false;
  return verify_prime_divisor_class(alg, cert, I, t);
}

bool associated(const AlgebraElem& f, const AlgebraElem& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.size() != g.size()) return false;
  // a unit c X^v preserves a compatible order, so terms correspond index by index
  const IntVec v = g.terms[0].exp - f.terms[0].exp;
  const FieldElem c = g.terms[0].coeff / f.terms[0].coeff;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (g.terms[i].exp - f.terms[i].exp != v) return false;
    if (!(g.terms[i].coeff == c * f.terms[i].coeff)) return false;
  }
  return true;
}

bool pairwise_non_associated(const std::vector<AlgebraElem>& gs) {
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (gs[i].is_zero()) throw PreconditionError("nonzero", "zero element");
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (associated(gs[i], gs[j])) return false;
  }
  return true;
}

}  // namespace krull
