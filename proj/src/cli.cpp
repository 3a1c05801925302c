#include "krull/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "krull/errors.hpp"

namespace krull::cli {

namespace {

using namespace jsonio;

const std::set<std::string> kCommands{"classgroup",   "primes-in-class", "check-irreducible",
                                      "intersection-check", "counterexample",  "divisor-theory-check"};

const std::set<std::string> kKeys{"command", "domain", "group",   "I",    "J",    "count", "method",
                                  "alpha",   "element", "mode",   "prime", "samples", "seed", "bound",
                                  "gs",      "atom",    "monoid_prime"};

DomainInstance domain_of(const json& req) {
  DomainInstance dom = parse_domain(req.contains("domain") ? req["domain"].get<std::string>() : "Z");
  if (const char* env = std::getenv("KRULLKIT_FACTOR_BOUND")) {
    const Int b = parse_int(json(std::string(env)), "KRULLKIT_FACTOR_BOUND");
    if (b < 2) throw SchemaError("KRULLKIT_FACTOR_BOUND must be >= 2");
    dom.factor_bound = b;
  }
  return dom;
}

MonoidAlgebra algebra_of(const json& req) {
  if (!req.contains("group")) throw SchemaError("missing 'group' (free rank or block monoid weights)");
  return MonoidAlgebra(domain_of(req), parse_group(req["group"]));
}

long long_of(const json& req, const char* key, long dflt, long lo, long hi) {
  if (!req.contains(key)) return dflt;
  const Int v = parse_int(req[key], key);
  if (v < lo || v > hi)
    throw SchemaError(std::string(key) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v.get_si();
}

std::string string_of(const json& req, const char* key, const std::string& dflt) {
  if (!req.contains(key)) return dflt;
  if (!req[key].is_string()) throw SchemaError(std::string(key) + ": expected a string");
  return req[key].get<std::string>();
}

AlgebraElem element_of(const MonoidAlgebra& alg, const json& req) {
  if (!req.contains("element")) throw SchemaError("missing 'element'");
  const json& e = req["element"];
  AlgebraElem f = e.is_string() ? parse_element_text(alg, e.get<std::string>()) : parse_element(alg, e);
  if (f.is_zero()) throw SchemaError("element is zero");
  return f;
}

IntVec divisor_target(const MonoidAlgebra& alg, const json& req) {
  const std::size_t r = alg.group().num_primes();
  if (!req.contains("J")) return zero_vec(r);
  if (!alg.group().has_monoid()) throw SchemaError("J needs a block monoid, not a free group");
  const IntVec t = parse_vec(req["J"], "J");
  if (t.size() != r) throw SchemaError("J has length " + std::to_string(t.size()) + ", expected " + std::to_string(r));
  return t;
}

std::vector<IntVec> vec_list(const json& j, const std::string& what) {
  std::vector<IntVec> out;
  if (j.is_string()) {
    std::istringstream is(j.get<std::string>());
    std::string part;
    while (std::getline(is, part, ';')) out.push_back(parse_vec_text(part, what));
  } else if (j.is_array()) {
    for (const auto& x : j) out.push_back(parse_vec(x, what));
  } else {
    throw SchemaError(what + ": expected a list of integer vectors");
  }
  return out;
}

Outcome ok(json result) { return Outcome{std::move(result), "ok", kOk}; }

json class_vector_list(const std::vector<IntVec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

}  // namespace

Outcome cmd_classgroup(const json& req) {
  json result = json::object();
  if (req.contains("domain") || !req.contains("group")) {
    const DomainInstance dom = domain_of(req);
    const DomainClassGroup cg(dom);
    json gens = json::array();
    for (const auto& P : cg.generators()) gens.push_back(to_json(P));
    json samples = json::array();
    if (!dom.is_field())
      for (long p : {2L, 3L, 5L, 7L})
        for (const auto& P : primes_above(dom, Int(p)))
          samples.push_back({{"prime", to_json(P)}, {"class", to_json(cg.class_of(prime_ideal(dom, P)))}});
    result["domain"] = {{"name", dom.name()},
                        {"class_group", to_json(cg.desc())},
                        {"order", std::to_string(std::max<std::size_t>(cg.order(), 1))},
                        {"generators", gens},
                        {"prime_classes", samples}};
  }
  if (req.contains("group")) {
    const ExponentGroup g = parse_group(req["group"]);
    json m{{"group", to_json(g)}};
    if (g.has_monoid()) {
      const BlockMonoid& M = g.monoid();
      m["class_group"] = to_json(class_group_s(M));
      std::vector<IntVec> deltas;
      for (std::size_t i = 0; i < M.num_primes(); ++i) deltas.push_back(class_of_divisor(M, unit_vec(M.num_primes(), i)));
      m["prime_classes"] = class_vector_list(deltas);
    } else {
      m["class_group"] = to_json(ClassGroupDesc{});
      m["prime_classes"] = json::array();
    }
    result["monoid"] = m;
  }
  return ok(result);
}

Outcome cmd_primes_in_class(const json& req, bool reverify) {
  const MonoidAlgebra alg = algebra_of(req);
  const DomainInstance& dom = alg.domain();
  const FracIdealD I = parse_ideal(dom, req.contains("I") ? req["I"] : json::array());
  const IntVec t = divisor_target(alg, req);
  const auto m = static_cast<std::size_t>(long_of(req, "count", 3, 0, 1000));
  const long bound = long_of(req, "bound", kDefaultSearchBound, 0, 200);

  Outcome out;
  std::vector<PrimeDivisorCertificate> certs;
  std::string construction;
  std::optional<IntVec> target_t;
  if (!alg.group().has_monoid()) {
    const std::string method = string_of(req, "method", "shifted");
    if (method == "shifted") {
      construction = "a/b + X^alpha";
      const std::size_t n = alg.group().rank();
      const IntVec alpha = req.contains("alpha") ? parse_vec(req["alpha"], "alpha") : unit_vec(n, n - 1);
      if (alpha.size() != n) throw SchemaError("alpha has the wrong length");
      certs = construct_shifted_binomials(alg, I, alpha, m);
    } else if (method == "binomial") {
      construction = "a + b X^g";
      certs = construct_height_zero_binomials(alg, I, m);
    } else {
      throw SchemaError("method: expected 'shifted' or 'binomial'");
    }
  } else if (dom.is_field()) {
    construction = "X^g1 + ... + X^gn + X^(gn + a)";
    target_t = t;
    FieldCaseOutcome fc = construct_field_case(alg, t, m, bound);
    certs = std::move(fc.certificates);
    if (fc.achieved < fc.requested) {
      out.status = "inconclusive";
      out.exit_code = kExhausted;
      out.result["note"] = fc.note;
    }
  } else {
    construction = "X^h + sum p X^e";
    target_t = t;
    certs = construct_in_class(alg, I, t, m, bound);
  }

  json cs = json::array();
  std::vector<AlgebraElem> elems;
  for (const auto& c : certs) {
    cs.push_back(to_json(alg, c));
    elems.push_back(c.element);
  }
  const bool non_assoc = pairwise_non_associated(elems);
  out.result["construction"] = construction;
  out.result["algebra"] = {{"domain", dom.name()}, {"group", to_json(alg.group())}};
  out.result["certificates"] = cs;
  out.result["count_requested"] = std::to_string(m);
  out.result["count_achieved"] = std::to_string(certs.size());
  out.result["pairwise_non_associated"] = non_assoc;
  out.result["target"] = {{"I", to_json(dom, I)},
                          {"J", to_json(t)},
                          {"domain_class", to_json(alg.domain_class(I))},
                          {"monoid_class", to_json(target_t ? alg.monoid_class(*target_t) : IntVec{})}};
  if (!non_assoc) {
    out.status = "failed";
    out.exit_code = kVerificationFailed;
  }
  if (reverify) {
    // replay from the serialized form only
    std::size_t passed = 0;
    for (const auto& cj : cs) {
      PrimeDivisorCertificate c;
      c.element = parse_element(alg, cj.at("element"));
      c.irreducibility = parse_certificate(alg, cj.at("irreducibility"));
      if (reverify_prime_divisor(alg, c, I, target_t)) ++passed;
    }
    out.result["reverify"] = {{"checked", std::to_string(cs.size())},
                              {"passed", std::to_string(passed)},
                              {"ok", passed == cs.size()}};
    if (passed != cs.size()) {
      out.status = "failed";
      out.exit_code = kVerificationFailed;
    }
  }
  return out;
}

Outcome cmd_check_irreducible(const json& req, bool reverify) {
  const MonoidAlgebra alg = algebra_of(req);
  const std::string mode = string_of(req, "mode", "oracle");
  Outcome out;
  std::optional<IrreducibilityCertificate> cert;
  AlgebraElem f;
  if (mode == "oracle") {
    f = element_of(alg, req);
  } else if (mode == "eisenstein") {
    f = element_of(alg, req);
    if (!req.contains("prime")) throw SchemaError("eisenstein mode needs 'prime'");
    cert = eisenstein_certificate(alg, f, parse_prime(alg.domain(), req["prime"]));
  } else if (mode == "binomial") {
    f = element_of(alg, req);
    const IntVec zero = zero_vec(alg.group().rank());
    if (f.size() != 2 || !(f.terms[0].exp == zero || f.terms[1].exp == zero))
      throw PreconditionError("element-shape", "expected a + b X^g with g != 0");
    const std::size_t i0 = f.terms[0].exp == zero ? 0 : 1;
    cert = binomial_certificate(alg, f.terms[i0].coeff, f.terms[1 - i0].coeff, f.terms[1 - i0].exp);
  } else if (mode == "monomial-sum") {
    if (!req.contains("gs") || !req.contains("atom") || !req.contains("monoid_prime"))
      throw SchemaError("monomial-sum mode needs 'gs', 'atom' and 'monoid_prime'");
    const auto P = static_cast<std::size_t>(long_of(req, "monoid_prime", 0, 0, 1L << 20));
    cert = monomial_sum_certificate(alg, vec_list(req["gs"], "gs"), parse_vec(req["atom"], "atom"), P);
    f = cert->element;
    if (req.contains("element") && !(element_of(alg, req) == f))
      throw PreconditionError("element-shape", "element differs from X^g1 + ... + X^gn + X^(gn + a)");
  } else {
    throw SchemaError("mode: expected oracle, eisenstein, binomial or monomial-sum");
  }

  const OracleResult orc = kronecker_irreducible_oracle(alg, f);
  out.result["element"] = to_json(alg, f);
  out.result["oracle"] = to_json(alg, orc);
  if (cert) {
    const json cj = to_json(alg, *cert);
    out.result["certificate"] = cj;
    if (orc.verdict == OracleVerdict::Reducible || orc.verdict == OracleVerdict::Unit) {
      out.status = "failed";
      out.exit_code = kVerificationFailed;
    }
    if (reverify) {
      const bool good = reverify_certificate(alg, parse_certificate(alg, cj));
      out.result["reverify"] = {{"ok", good}};
      if (!good) {
        out.status = "failed";
        out.exit_code = kVerificationFailed;
      }
    }
  } else if (orc.verdict == OracleVerdict::Unknown) {
    out.status = "inconclusive";
    out.exit_code = kExhausted;
  }
  return out;
}

Outcome cmd_intersection_check(const json& req) {
  const MonoidAlgebra alg = algebra_of(req);
  const AlgebraElem f = element_of(alg, req);
  IntersectionCheckOptions opt;
  opt.samples = static_cast<std::size_t>(long_of(req, "samples", 500, 0, 1000000));
  opt.seed = static_cast<std::uint64_t>(long_of(req, "seed", 1, 0, std::numeric_limits<long>::max()));
  opt.gen_bound = long_of(req, "bound", opt.gen_bound, 0, 200);
  const IntersectionCheckReport r = intersection_oracle_check(alg, f, opt);
  Outcome out = ok({{"element", to_json(alg, f)}, {"report", to_json(alg, r)}});
  if (!r.pass) {
    out.status = "failed";
    out.exit_code = kVerificationFailed;
  }
  return out;
}

Outcome cmd_counterexample(const json& req) {
  const long bound = long_of(req, "bound", 20, 0, 200);
  std::optional<IntVec> alpha;
  if (req.contains("alpha")) alpha = parse_vec(req["alpha"], "alpha");
  if (alpha && alpha->size() != 4) throw SchemaError("alpha must have 4 entries, one per element of {-2,-1,1,2}");
  const CounterexampleReport r = verify_counterexample(bound, alpha);
  Outcome out = ok(to_json(r));
  if (r.search.witness || !r.identity_holds) {
    out.status = "failed";
    out.exit_code = kVerificationFailed;
  }
  return out;
}

Outcome cmd_divisor_theory_check(const json& req) {
  if (!req.contains("group")) throw SchemaError("missing 'group'");
  const ExponentGroup g = parse_group(req["group"]);
  if (!g.has_monoid()) throw SchemaError("divisor-theory-check needs block monoid weights");
  const DivisorTheoryReport r = verify_divisor_theory(g.monoid(), long_of(req, "bound", 8, 0, 64));
  Outcome out = ok(to_json(r));
  if (r.status == DivisorTheoryStatus::Inconclusive) {
    out.status = "inconclusive";
    out.exit_code = kExhausted;
  }
  return out;
}

std::pair<json, int> execute(const json& req, bool reverify) {
  json env{{"version", "1"}, {"request", req}};
  auto fail = [&](const std::string& kind, const std::string& msg, int code, const std::string& clause = "") {
    env["status"] = "error";
    env["error"] = {{"kind", kind}, {"message", msg}};
    if (!clause.empty()) env["error"]["clause"] = clause;
    return std::pair<json, int>{env, code};
  };
  try {
    if (!req.is_object()) throw SchemaError("request must be a JSON object");
    for (const auto& [k, v] : req.items())
      if (!kKeys.count(k)) throw SchemaError("unknown request field '" + k + "'");
    const std::string cmd = string_of(req, "command", "");
    if (!kCommands.count(cmd)) throw SchemaError("unknown command '" + cmd + "'");
    env["command"] = cmd;
    Outcome o;
    if (cmd == "classgroup") o = cmd_classgroup(req);
    else if (cmd == "primes-in-class") o = cmd_primes_in_class(req, reverify);
    else if (cmd == "check-irreducible") o = cmd_check_irreducible(req, reverify);
    else if (cmd == "intersection-check") o = cmd_intersection_check(req);
    else if (cmd == "counterexample") o = cmd_counterexample(req);
    else o = cmd_divisor_theory_check(req);
    env["status"] = o.status;
    env["result"] = std::move(o.result);
    return {env, o.exit_code};
  } catch (const SchemaError& e) {
    return fail("schema", e.what(), kSchema);
  } catch (const PreconditionError& e) {
    return fail("precondition", e.what(), kPrecondition, e.clause());
  } catch (const ExhaustedError& e) {
    return fail("exhausted", e.what(), kExhausted);
  } catch (const json::exception& e) {
    return fail("schema", e.what(), kSchema);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kVerificationFailed);
  }
}

namespace {

void print_human(const json& env, std::ostream& out) {
  out << env.value("command", "krullkit") << ": " << env.value("status", "?") << '\n';
  if (env.contains("error")) {
    out << "  " << env["error"].value("message", "") << '\n';
    return;
  }
  for (const auto& [k, v] : env["result"].items()) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.size() > 160) s = v.is_array() ? "[" + std::to_string(v.size()) + " entries]" : s.substr(0, 157) + "...";
    out << "  " << k << ": " << s << '\n';
  }
}

json read_request(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read request file '" + path + "'");
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("request is not valid JSON: ") + e.what());
  }
}

// "-2,-1,1,2" (rank 1) or "1 0,0 1,-1 -1"
json weights_json(const std::string& s) {
  json ws = json::array();
  std::istringstream is(s);
  std::string part;
  while (std::getline(is, part, ',')) {
    std::istringstream ps(part);
    json w = json::array();
    std::string x;
    while (ps >> x) w.push_back(x);
    if (w.empty()) throw SchemaError("weights: empty entry in '" + s + "'");
    ws.push_back(w);
  }
  return ws;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisor classes, prime divisors and certificates in monoid algebras over Krull domains", "krullkit"};
  app.require_subcommand(1);

  struct Opts {
    std::map<std::string, std::string> text;
    bool json_out = false;
    bool reverify = false;
    std::string request;
  } o;
  const std::vector<std::pair<std::string, std::string>> opts{
      {"domain", "Z, Q or Z[sqrt(d)]"},
      {"free", "exponent group Z^n"},
      {"weights", "block monoid weights, e.g. \"-2,-1,1,2\" or \"1 0,0 1,-1 -1\""},
      {"I", "generators of the divisorial ideal of D, e.g. \"2,1+sqrt(-5)\""},
      {"J", "divisor vector of the v-ideal of S, e.g. \"0,0,1,0\""},
      {"count", "number of prime divisors"},
      {"method", "shifted or binomial (free groups)"},
      {"alpha", "exponent for a/b + X^alpha"},
      {"element", "terms coeff@exponent separated by ';', e.g. \"2@0;1@1\""},
      {"mode", "oracle, eisenstein, binomial or monomial-sum"},
      {"prime", "p or p:root"},
      {"samples", "random samples"},
      {"seed", "random seed"},
      {"bound", "search bound"},
      {"gs", "exponents g_i, ';'-separated coordinate vectors"},
      {"atom", "coordinates of a"},
      {"monoid-prime", "index of the prime divisor P of S"},
  };
  for (const auto& name : kCommands) {
    CLI::App* sub = app.add_subcommand(name);
    for (const auto& [opt, help] : opts) sub->add_option("--" + opt, o.text[opt], help);
    sub->add_flag("--json", o.json_out, "print the JSON response");
    sub->add_flag("--reverify", o.reverify, "replay certificates from their serialized form");
    sub->add_option("--request", o.request, "JSON request file, '-' for stdin");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kSchema;
  }

  json req = json::object();
  std::string cmd = app.get_subcommands().front()->get_name();
  auto given = [&](const std::string& k) { return app.get_subcommands().front()->count("--" + k) > 0; };
  try {
    if (!o.request.empty()) req = read_request(o.request);
    if (!req.is_object()) throw SchemaError("request must be a JSON object");
    if (req.contains("command") && req["command"] != cmd)
      throw SchemaError("request command '" + req["command"].dump() + "' does not match '" + cmd + "'");
    req["command"] = cmd;
    for (const char* k : {"domain", "method", "mode", "prime", "element", "count", "samples", "seed", "bound"})
      if (given(k)) req[k] = o.text[k];
    if (given("free") && given("weights")) throw SchemaError("give either --free or --weights");
    if (given("free")) req["group"] = {{"free", o.text["free"]}};
    if (given("weights")) req["group"] = {{"weights", weights_json(o.text["weights"])}};
    if (given("I")) {
      json gens = json::array();
      std::istringstream is(o.text["I"]);
      std::string g;
      while (std::getline(is, g, ',')) gens.push_back(g);
      req["I"] = gens;
    }
    for (const char* k : {"J", "alpha", "atom"})
      if (given(k)) req[k] = to_json(parse_vec_text(o.text[k], k));
    if (given("gs")) req["gs"] = o.text["gs"];
    if (given("monoid-prime")) req["monoid_prime"] = o.text["monoid-prime"];
  } catch (const Error& e) {
    err << "krullkit: " << e.what() << '\n';
    if (o.json_out)
      out << json{{"command", cmd}, {"status", "error"}, {"error", {{"kind", "schema"}, {"message", e.what()}}}, {"version", "1"}}.dump(2)
          << '\n';
    return kSchema;
  }

  auto [env, code] = execute(req, o.reverify);
  if (env.contains("error")) err << "krullkit: " << env["error"]["message"].get<std::string>() << '\n';
  if (o.json_out)
    out << env.dump(2) << '\n';
  else
    print_human(env, out);
  return code;
}

}  // namespace krull::cli
