#include "krull/json_io.hpp"

#include <regex>
#include <sstream>

#include "krull/errors.hpp"

namespace krull::jsonio {

namespace {

const std::regex kIntRe(R"([+-]?\d+)");
const std::regex kRatRe(R"([+-]?\d+(/\d+)?)");
const std::regex kDomainRe(R"(Z\[sqrt\((-?\d+)\)\])");
// re, then an optional signed multiple of sqrt(d)
// (the lookahead keeps "12*sqrt(d)" from reading as 12 + sqrt(d))
const std::regex kFieldRe(R"((?:([+-]?\d+(?:/\d+)?)(?=[+-]|$))?(?:([+-]?)(\d+(?:/\d+)?)?\*?sqrt\((-?\d+)\))?)");

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string kind_name(PrimeKind k) {
  switch (k) {
    case PrimeKind::Rational: return "rational";
    case PrimeKind::Ramified: return "ramified";
    case PrimeKind::Split: return "split";
    case PrimeKind::Inert: return "inert";
  }
  return "?";
}

const json& field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(what + ": missing field '" + key + "'");
  return j.at(key);
}

std::string text_of(const json& j, const std::string& what) {
  if (!j.is_string()) throw SchemaError(what + ": expected a string");
  return j.get<std::string>();
}

json fe(const FieldElem& x) { return x.to_string(); }

json steps_json(const std::vector<TranscriptStep>& steps) {
  json out = json::array();
  for (const auto& s : steps) out.push_back({{"clause", s.clause}, {"ok", s.ok}, {"value", s.value}});
  return out;
}

json vecs_json(const std::vector<IntVec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

}  // namespace

json to_json(const Int& x) { return x.get_str(); }

json to_json(const IntVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Int parse_int(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Int(j.get<long>());
  const std::string s = strip(text_of(j, what));
  if (!std::regex_match(s, kIntRe)) throw SchemaError(what + ": '" + s + "' is not a decimal integer");
  return Int(s[0] == '+' ? s.substr(1) : s);
}

Rat parse_rat(const std::string& raw, const std::string& what) {
  const std::string s = strip(raw);
  if (!std::regex_match(s, kRatRe)) throw SchemaError(what + ": '" + s + "' is not a rational number");
  Rat q(s[0] == '+' ? s.substr(1) : s);
  if (q.get_den() == 0) throw SchemaError(what + ": zero denominator");
  q.canonicalize();
  return q;
}

IntVec parse_vec(const json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + ": expected an array of integers");
  IntVec v;
  for (const auto& x : j) v.push_back(parse_int(x, what));
  return v;
}

IntVec parse_vec_text(const std::string& s, const std::string& what) {
  IntVec v;
  if (strip(s).empty()) return v;
  for (const auto& part : split(s, ',')) v.push_back(parse_int(json(part), what));
  return v;
}

DomainInstance parse_domain(const std::string& raw) {
  const std::string s = strip(raw);
  if (s == "Z") return DomainInstance::integers();
  if (s == "Q") return DomainInstance::rationals();
  std::smatch m;
  if (std::regex_match(s, m, kDomainRe)) return DomainInstance::quadratic(Int(m[1].str()));
  throw SchemaError("domain: expected Z, Q or Z[sqrt(d)], got '" + s + "'");
}

ExponentGroup parse_group(const json& j) {
  if (!j.is_object()) throw SchemaError("group: expected an object");
  if (j.contains("free") == j.contains("weights")) throw SchemaError("group: give exactly one of 'free' or 'weights'");
  if (j.contains("free")) {
    const Int n = parse_int(j.at("free"), "group.free");
    if (n < 1 || n > 16) throw SchemaError("group.free: rank must be in 1..16");
    return ExponentGroup::free_group(n.get_ui());
  }
  const json& w = j.at("weights");
  if (!w.is_array()) throw SchemaError("group.weights: expected an array");
  std::vector<IntVec> ws;
  for (const auto& x : w) ws.push_back(x.is_array() ? parse_vec(x, "group.weights") : IntVec{parse_int(x, "group.weights")});
  return ExponentGroup::of_monoid(make_block_monoid(ws));
}

json to_json(const ExponentGroup& g) {
  json out{{"name", g.name()}, {"rank", std::to_string(g.rank())}};
  if (g.has_monoid()) out["weights"] = vecs_json(g.monoid().weights());
  return out;
}

FieldElem parse_field_elem(const DomainInstance& dom, const std::string& raw) {
  const std::string s = strip(raw);
  std::smatch m;
  if (s.empty() || !std::regex_match(s, m, kFieldRe)) throw SchemaError("coefficient: cannot parse '" + s + "'");
  const Rat re = m[1].matched ? parse_rat(m[1].str(), "coefficient") : Rat(0);
  Rat im = 0;
  if (m[4].matched) {
    if (!dom.is_quadratic() || Int(m[4].str()) != dom.d)
      throw SchemaError("coefficient: sqrt(" + m[4].str() + ") is not in the fraction field of " + dom.name());
    im = m[3].matched ? parse_rat(m[3].str(), "coefficient") : Rat(1);
    if (m[2].str() == "-") im = -im;
  }
  return field_elem(dom, re, im);
}

FracIdealD parse_ideal(const DomainInstance& dom, const json& gens) {
  if (!gens.is_array()) throw SchemaError("ideal: expected an array of generators");
  if (gens.empty()) return FracIdealD();
  std::vector<FieldElem> xs;
  for (const auto& g : gens) {
    const FieldElem x = parse_field_elem(dom, text_of(g, "ideal generator"));
    if (x.is_zero()) throw SchemaError("ideal: zero generator");
    xs.push_back(x);
  }
  return v_closure_d(dom, xs);
}

json to_json(const DomainInstance& dom, const FracIdealD& I) {
  json gens = json::array();
  for (const auto& g : I.generators(dom)) gens.push_back(fe(g));
  return {{"generators", gens}, {"text", I.to_string(dom)}};
}

PrimePlace parse_prime(const DomainInstance& dom, const json& j) {
  const std::string s = strip(text_of(j, "prime"));
  const auto parts = split(s, ':');
  if (parts.empty() || parts.size() > 2) throw SchemaError("prime: expected 'p' or 'p:root'");
  const Int p = parse_int(json(parts[0]), "prime");
  if (p < 2 || !is_prime(p)) throw SchemaError("prime: " + p.get_str() + " is not a rational prime");
  const auto places = primes_above(dom, p);
  if (parts.size() == 1) {
    if (places.size() != 1) throw SchemaError("prime: " + p.get_str() + " splits; give 'p:root'");
    return places[0];
  }
  const Int root = parse_int(json(parts[1]), "prime root");
  for (const auto& P : places)
    if (P.root == root) return P;
  throw SchemaError("prime: no prime above " + p.get_str() + " with root " + root.get_str());
}

json to_json(const PrimePlace& P) {
  return {{"kind", kind_name(P.kind)}, {"p", P.p.get_str()}, {"root", P.root.get_str()}, {"text", P.to_string()}};
}

json to_json(const DivisorD& div) {
  json out = json::array();
  for (const auto& [P, e] : div) out.push_back({{"exp", std::to_string(e)}, {"prime", to_json(P)}});
  return out;
}

json to_json(const MonoidAlgebra& alg, const AlgebraElem& f) {
  json terms = json::array();
  for (const auto& t : f.terms) terms.push_back({{"coeff", fe(t.coeff)}, {"exp", to_json(t.exp)}});
  return {{"terms", terms}, {"text", alg.to_string(f)}};
}

AlgebraElem parse_element(const MonoidAlgebra& alg, const json& j) {
  const json& terms = field(j, "terms", "element");
  if (!terms.is_array()) throw SchemaError("element.terms: expected an array");
  std::vector<Term> ts;
  for (const auto& t : terms) {
    const IntVec e = parse_vec(field(t, "exp", "element term"), "element exponent");
    if (e.size() != alg.group().rank())
      throw SchemaError("element exponent has length " + std::to_string(e.size()) + ", expected " +
                        std::to_string(alg.group().rank()));
    ts.push_back(Term{e, parse_field_elem(alg.domain(), text_of(field(t, "coeff", "element term"), "coefficient"))});
  }
  return alg.make(ts);
}

AlgebraElem parse_element_text(const MonoidAlgebra& alg, const std::string& s) {
  json terms = json::array();
  for (const auto& part : split(strip(s), ';')) {
    const auto at = part.find('@');
    if (at == std::string::npos) throw SchemaError("element: term '" + part + "' lacks '@exponent'");
    terms.push_back({{"coeff", part.substr(0, at)}, {"exp", to_json(parse_vec_text(part.substr(at + 1), "element exponent"))}});
  }
  return parse_element(alg, json{{"terms", terms}});
}

json to_json(const MonoidAlgebra& alg, const IrreducibilityCertificate& c) {
  json out{{"kind", to_string(c.kind)},
           {"element", to_json(alg, c.element)},
           {"transcript", steps_json(c.transcript)}};
  if (!c.assumption.empty()) out["assumption"] = c.assumption;
  if (c.a) out["a"] = fe(*c.a);
  if (c.b) out["b"] = fe(*c.b);
  if (c.exponent) out["exponent"] = to_json(*c.exponent);
  if (c.prime) out["prime"] = to_json(*c.prime);
  if (!c.sum_exponents.empty()) out["sum_exponents"] = vecs_json(c.sum_exponents);
  if (c.sum_shift) out["sum_shift"] = to_json(*c.sum_shift);
  if (c.monoid_prime) out["monoid_prime"] = std::to_string(*c.monoid_prime);
  return out;
}

IrreducibilityCertificate parse_certificate(const MonoidAlgebra& alg, const json& j) {
  IrreducibilityCertificate c;
  const std::string kind = text_of(field(j, "kind", "certificate"), "certificate.kind");
  if (kind == "binomial") c.kind = CertKind::Binomial;
  else if (kind == "eisenstein") c.kind = CertKind::Eisenstein;
  else if (kind == "monomial-sum") c.kind = CertKind::MonomialSum;
  else if (kind == "oracle") c.kind = CertKind::OracleVerified;
  else throw SchemaError("certificate.kind: unknown '" + kind + "'");
  c.element = parse_element(alg, field(j, "element", "certificate"));
  const DomainInstance& dom = alg.domain();
  if (j.contains("a")) c.a = parse_field_elem(dom, text_of(j["a"], "certificate.a"));
  if (j.contains("b")) c.b = parse_field_elem(dom, text_of(j["b"], "certificate.b"));
  if (j.contains("exponent")) c.exponent = parse_vec(j["exponent"], "certificate.exponent");
  if (j.contains("prime")) {
    const json& P = j["prime"];
    const std::string p = text_of(field(P, "p", "certificate.prime"), "prime.p");
    const std::string root = text_of(field(P, "root", "certificate.prime"), "prime.root");
    c.prime = parse_prime(dom, json(root == "0" ? p : p + ":" + root));
  }
  if (j.contains("sum_exponents"))
    for (const auto& g : j["sum_exponents"]) c.sum_exponents.push_back(parse_vec(g, "certificate.sum_exponents"));
  if (j.contains("sum_shift")) c.sum_shift = parse_vec(j["sum_shift"], "certificate.sum_shift");
  if (j.contains("monoid_prime")) c.monoid_prime = parse_int(j["monoid_prime"], "certificate.monoid_prime").get_ui();
  if (j.contains("assumption")) c.assumption = text_of(j["assumption"], "certificate.assumption");
  for (const auto& s : field(j, "transcript", "certificate"))
    c.transcript.push_back(TranscriptStep{text_of(field(s, "clause", "step"), "step.clause"),
                                          text_of(field(s, "value", "step"), "step.value"),
                                          field(s, "ok", "step").get<bool>()});
  return c;
}

json to_json(const MonoidAlgebra& alg, const PrimeDivisorCertificate& c) {
  return {{"element", to_json(alg, c.element)},
          {"irreducibility", to_json(alg, c.irreducibility)},
          {"domain_part", to_json(c.intersection.domain_part)},
          {"monoid_part", to_json(c.intersection.monoid_part)},
          {"domain_class", to_json(c.intersection.domain_class)},
          {"monoid_class", to_json(c.intersection.monoid_class)},
          {"target_domain_class", to_json(c.target_domain_class)},
          {"target_monoid_class", to_json(c.target_monoid_class)},
          {"verified", c.verified}};
}

json to_json(const ClassGroupDesc& cg) {
  json factors = json::array();
  for (const auto& f : cg.invariant_factors) factors.push_back(f.get_str());
  json proj = json::array();
  for (std::size_t j = 0; j < cg.projection.cols(); ++j) proj.push_back(to_json(cg.projection.col(j)));
  return {{"invariant_factors", factors}, {"generator_images", proj}, {"trivial", cg.is_trivial()}};
}

json to_json(const MonoidAlgebra& alg, const OracleResult& r) {
  json factors = json::array();
  for (const auto& f : r.factors) factors.push_back(to_json(alg, f));
  return {{"verdict", to_string(r.verdict)},
          {"factors", factors},
          {"normalized_degree", std::to_string(r.normalized_degree)},
          {"reason", r.reason}};
}

json to_json(const MonoidAlgebra& alg, const IntersectionCheckReport& r) {
  json out{{"pass", r.pass},
           {"generator_checks", std::to_string(r.generator_checks)},
           {"samples", std::to_string(r.samples)},
           {"hits", std::to_string(r.hits)},
           {"inside", std::to_string(r.inside)},
           {"domain_part", to_json(r.domain_part)},
           {"monoid_part", to_json(r.monoid_part)}};
  if (!r.failure.empty()) out["failure"] = r.failure;
  if (r.counterexample) out["counterexample"] = to_json(alg, *r.counterexample);
  return out;
}

json to_json(const WitnessReport& r) {
  json out{{"bound", std::to_string(r.bound)},
           {"threshold", std::to_string(r.threshold)},
           {"tested", std::to_string(r.tested)},
           {"min_valuation", r.min_valuation.get_str()},
           {"additivity_checked", r.additivity_checked}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  if (r.witness_prime) out["witness_prime"] = std::to_string(*r.witness_prime);
  return out;
}

json to_json(const CounterexampleReport& r) {
  return {{"bound", std::to_string(r.bound)},
          {"alpha1", to_json(r.alpha1)},
          {"alpha2", to_json(r.alpha2)},
          {"identity", {{"holds", r.identity_holds},
                        {"statement", "v_i(alpha2 + a - alpha1) = v_i(alpha1) + v_i(a)"},
                        {"lower_bound", r.symbolic_min.get_str()}}},
          {"search", to_json(r.search)},
          {"class_group", to_json(r.class_group)},
          {"statement", r.statement}};
}

json to_json(const DivisorTheoryReport& r) {
  json meets = json::array();
  for (const auto& m : r.meets) meets.push_back(m ? to_json(*m) : json());
  json unreached = json::array();
  for (auto i : r.unreached) unreached.push_back(std::to_string(i));
  json out{{"status", to_string(r.status)}, {"bound", std::to_string(r.bound)}, {"meets", meets}, {"unreached", unreached}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

}  // namespace krull::jsonio
