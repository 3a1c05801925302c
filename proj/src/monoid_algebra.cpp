#include "krull/monoid_algebra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "krull/errors.hpp"

namespace krull {

// ---- ExponentGroup ---------------------------------------------------------

ExponentGroup ExponentGroup::free_group(std::size_t n) {
  if (n == 0) throw PreconditionError("rank-positive", "free exponent group needs rank >= 1");
  ExponentGroup g;
  g.n_ = n;
  return g;
}

ExponentGroup ExponentGroup::of_monoid(BlockMonoid m) {
  if (m.lattice_rank() == 0) throw PreconditionError("nontrivial-monoid", "B(G0) has only the zero element");
  ExponentGroup g;
  g.n_ = m.lattice_rank();
  g.monoid_ = std::move(m);
  return g;
}

const BlockMonoid& ExponentGroup::monoid() const {
  if (!monoid_) throw Error("exponent group has no monoid");
  return *monoid_;
}

IntVec ExponentGroup::divisor(const IntVec& coords) const {
  if (coords.size() != n_) throw PreconditionError("exponent-length", "exponent " + to_string(coords) + " has wrong length");
  return monoid_ ? monoid_->divisor(coords) : IntVec{};
}

bool ExponentGroup::in_monoid(const IntVec& coords) const {
  const IntVec e = divisor(coords);
  return std::all_of(e.begin(), e.end(), [](const Int& x) { return x >= 0; });
}

std::string ExponentGroup::name() const {
  if (!monoid_) return "Z^" + std::to_string(n_);
  std::string s = "B({";
  for (std::size_t i = 0; i < monoid_->num_primes(); ++i) {
    if (i) s += ",";
    const IntVec& w = monoid_->weights()[i];
    s += w.size() == 1 ? w[0].get_str() : to_string(w);
  }
  return s + "})";
}

// ---- MonoidAlgebra -----------------------------------------------------------

MonoidAlgebra::MonoidAlgebra(DomainInstance dom, ExponentGroup group, std::optional<TotalOrderSpec> order)
    : dom_(std::move(dom)),
      group_(std::move(group)),
      order_(order ? std::move(*order) : TotalOrderSpec::standard(group_.rank())) {
  if (order_.dimension() != group_.rank())
    throw PreconditionError("order-dimension", "total order does not match the exponent rank");
}

AlgebraElem MonoidAlgebra::make(std::vector<Term> terms) const {
  for (const auto& t : terms) {
    if (t.exp.size() != group_.rank())
      throw PreconditionError("exponent-length", "exponent " + krull::to_string(t.exp) + " has wrong length");
    if (dom_.is_quadratic() && !t.coeff.is_rational() && t.coeff.d() != dom_.d)
      throw PreconditionError("coefficient-field", "coefficient from a different field");
    if (!dom_.is_quadratic() && !t.coeff.is_rational())
      throw PreconditionError("coefficient-field", "irrational coefficient over " + dom_.name());
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return order_.less(a.exp, b.exp); });
  AlgebraElem out;
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().exp == t.exp) {
      out.terms.back().coeff = out.terms.back().coeff + t.coeff;
    } else {
      out.terms.push_back(std::move(t));
    }
    if (out.terms.back().coeff.is_zero()) out.terms.pop_back();
  }
  for (auto& t : out.terms) t.coeff = field_elem(dom_, t.coeff.re(), t.coeff.im());
  return out;
}

bool MonoidAlgebra::is_normalized(const AlgebraElem& f) const {
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    if (f.terms[i].coeff.is_zero() || f.terms[i].exp.size() != group_.rank()) return false;
    if (i && !order_.less(f.terms[i - 1].exp, f.terms[i].exp)) return false;
  }
  return true;
}

AlgebraElem MonoidAlgebra::constant(const FieldElem& c) const { return make({Term{zero_vec(group_.rank()), c}}); }

AlgebraElem MonoidAlgebra::monomial(const FieldElem& c, const IntVec& exp) const { return make({Term{exp, c}}); }

AlgebraElem MonoidAlgebra::add(const AlgebraElem& f, const AlgebraElem& g) const {
  std::vector<Term> t = f.terms;
  t.insert(t.end(), g.terms.begin(), g.terms.end());
  return make(std::move(t));
}

AlgebraElem MonoidAlgebra::neg(const AlgebraElem& f) const {
  AlgebraElem out = f;
  for (auto& t : out.terms) t.coeff = -t.coeff;
  return out;
}

AlgebraElem MonoidAlgebra::sub(const AlgebraElem& f, const AlgebraElem& g) const { return add(f, neg(g)); }

AlgebraElem MonoidAlgebra::mul(const AlgebraElem& f, const AlgebraElem& g) const {
  std::vector<Term> t;
  t.reserve(f.size() * g.size());
  for (const auto& a : f.terms)
    for (const auto& b : g.terms) t.push_back(Term{a.exp + b.exp, a.coeff * b.coeff});
  return make(std::move(t));
}

AlgebraElem MonoidAlgebra::scale(const FieldElem& c, const AlgebraElem& f) const {
  std::vector<Term> t = f.terms;
  for (auto& x : t) x.coeff = c * x.coeff;
  return make(std::move(t));
}

ContentPair MonoidAlgebra::contents(const AlgebraElem& f) const {
  if (f.is_zero()) throw PreconditionError("nonzero", "contents of the zero element");
  std::vector<FieldElem> coeffs;
  std::vector<IntVec> divs;
  for (const auto& t : f.terms) {
    coeffs.push_back(t.coeff);
    divs.push_back(group_.divisor(t.exp));
  }
  return ContentPair{v_closure_d(dom_, coeffs), v_closure_s(divs)};
}

bool MonoidAlgebra::is_member_DS(const AlgebraElem& f) const {
  for (const auto& t : f.terms) {
    if (!dom_.is_field() && !t.coeff.is_integral()) return false;
    if (!group_.in_monoid(t.exp)) return false;
  }
  return true;
}

const DomainClassGroup& MonoidAlgebra::domain_class_group() const {
  if (!dcg_) dcg_ = std::make_shared<const DomainClassGroup>(dom_);
  return *dcg_;
}

const ClassGroupDesc& MonoidAlgebra::monoid_class_group() const {
  if (!mcg_) mcg_ = std::make_shared<const ClassGroupDesc>(group_.has_monoid() ? class_group_s(group_.monoid())
                                                                               : ClassGroupDesc{});
  return *mcg_;
}

IntVec MonoidAlgebra::domain_class(const FracIdealD& I) const { return domain_class_group().class_of(I); }

IntVec MonoidAlgebra::monoid_class(const IntVec& t) const {
  if (!group_.has_monoid()) return {};
  return monoid_class_group().classify(t);
}

PrincipalIntersectionRep MonoidAlgebra::intersect_principal(const AlgebraElem& f) const {
  const ContentPair c = contents(f);
  PrincipalIntersectionRep rep;
  rep.f = f;
  for (const auto& [P, e] : divisor_of(dom_, c.A)) rep.domain_part[P] = -e;
  rep.monoid_part = ideal_inverse_s(c.E);
  rep.domain_class = domain_class(ideal_inverse_d(dom_, c.A));
  rep.monoid_class = monoid_class(rep.monoid_part);
  return rep;
}

std::string MonoidAlgebra::to_string(const AlgebraElem& f) const {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    if (i) os << " + ";
    const Term& t = f.terms[i];
    const bool compound = !t.coeff.is_rational() && t.coeff.re() != 0;
    os << (compound ? "(" : "") << t.coeff.to_string() << (compound ? ")" : "");
    if (!is_zero(t.exp)) os << "*X^" << krull::to_string(t.exp);
  }
  return os.str();
}

// ---- sampling oracle for the principal intersection ----------------------------------------------------------

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

long draw_nonzero(std::mt19937_64& rng, long lim) {
  long x = draw(rng, 1, lim);
  return rng() % 2 ? x : -x;
}

struct Sampler {
  const MonoidAlgebra& alg;
  const IntersectionCheckOptions& opt;
  std::vector<FieldElem> a_gens;  // Z-basis of A^{-1}
  std::vector<IntVec> e_gens;     // generators of E^{-1}, lattice coordinates
  std::mt19937_64 rng;

  FieldElem uniform_coeff() {
    const auto& dom = alg.domain();
    const Rat re(draw(rng, -opt.max_height, opt.max_height), draw(rng, 1, opt.max_height));
    Rat im = 0;
    if (dom.is_quadratic() && rng() % 2) im = Rat(draw(rng, -opt.max_height, opt.max_height), draw(rng, 1, opt.max_height));
    return alg.coeff(re, im);
  }

  FieldElem ideal_coeff() {
    FieldElem c;
    while (c.is_zero()) {
      c = FieldElem(0);
      for (const auto& g : a_gens) c = c + FieldElem(Rat(draw(rng, -2, 2))) * g;
    }
    return c;
  }

  IntVec uniform_exp() {
    IntVec e;
    for (std::size_t i = 0; i < alg.group().rank(); ++i) e.emplace_back(draw(rng, -opt.box, opt.box));
    return e;
  }

  Term term() {
    const IntVec& g = e_gens[rng() % e_gens.size()];
    switch (rng() % 4) {
      case 0: return Term{uniform_exp(), uniform_coeff()};
      case 1: {
        IntVec e = g;
        for (auto& x : e) x += draw(rng, -1, 1);
        return Term{e, ideal_coeff()};
      }
      case 2: {
        // just outside A^{-1} in most cases
        const Rat q(draw_nonzero(rng, 3), draw(rng, 2, 3));
        return Term{g, FieldElem(q) * ideal_coeff()};
      }
      default: return Term{g, ideal_coeff()};
    }
  }

  AlgebraElem element() {
    for (;;) {
      std::vector<Term> t;
      const long k = draw(rng, 1, 3);
      for (long i = 0; i < k; ++i) t.push_back(term());
      AlgebraElem h = alg.make(std::move(t));
      if (!h.is_zero()) return h;
    }
  }
};

}  // namespace

IntersectionCheckReport intersection_oracle_check(const MonoidAlgebra& alg, const AlgebraElem& f, const IntersectionCheckOptions& opt,
                                   const std::optional<PrincipalIntersectionRep>& claimed) {
  if (f.is_zero()) throw PreconditionError("nonzero", "intersection check of the zero element");
  const PrincipalIntersectionRep rep = claimed ? *claimed : alg.intersect_principal(f);
  const DomainInstance& dom = alg.domain();
  const ExponentGroup& grp = alg.group();

  IntersectionCheckReport out;
  out.domain_part = rep.domain_part;
  out.monoid_part = rep.monoid_part;

  const FracIdealD Ainv = ideal_from_divisor(dom, rep.domain_part);
  Sampler s{alg, opt, Ainv.generators(dom), {}, std::mt19937_64(opt.seed)};
  if (grp.has_monoid()) {
    for (const auto& x : generators_of_divisor(grp.monoid(), rep.monoid_part, opt.gen_bound))
      s.e_gens.push_back(grp.monoid().coordinates(x));
  } else {
    s.e_gens.push_back(zero_vec(grp.rank()));
  }

  auto in_claim = [&](const AlgebraElem& h) {
    for (const auto& t : h.terms) {
      if (!ideal_contains(dom, Ainv, t.coeff)) return false;
      if (grp.has_monoid() && !ideal_contains_s(rep.monoid_part, grp.divisor(t.exp))) return false;
    }
    return true;
  };
  auto fail = [&](const std::string& why, const AlgebraElem& h) {
    out.pass = false;
    out.failure = why;
    out.counterexample = h;
  };

  // f * c X^h lies in D[S] for generators c of A^{-1} and h of E^{-1}
  for (const auto& c : s.a_gens)
    for (const auto& h : s.e_gens) {
      ++out.generator_checks;
      const AlgebraElem m = alg.monomial(c, h);
      if (!alg.is_member_DS(alg.mul(f, m))) {
        fail("f times a generator of A^{-1}[E^{-1}] is not in D[S]", m);
        return out;
      }
    }

  for (std::size_t i = 0; i < opt.samples; ++i) {
    const AlgebraElem h = s.element();
    ++out.samples;
    const bool member = alg.is_member_DS(alg.mul(f, h));
    const bool inside = in_claim(h);
    out.hits += member;
    out.inside += inside;
    if (member && !inside) {
      fail("f h in D[S] but h is not in A^{-1}[E^{-1}]", h);
      return out;
    }
    if (inside && !member) {
      fail("h in A^{-1}[E^{-1}] but f h is not in D[S]", h);
      return out;
    }
  }
  return out;
}

}  // namespace krull
