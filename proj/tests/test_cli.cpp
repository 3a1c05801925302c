#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "krull/cli.hpp"

using namespace krull;
using krull::cli::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json response() const { return json::parse(out); }
};

Run krullkit(std::vector<std::string> args) {
  args.insert(args.begin(), "krullkit");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classgroup") {
  const auto r = krullkit({"classgroup", "--weights=-2,-1,1,2", "--domain", "Z[sqrt(-5)]", "--json"});
  REQUIRE(r.code == 0);
  const json j = r.response();
  CHECK(j["status"] == "ok");
  CHECK(j["result"]["monoid"]["class_group"]["invariant_factors"] == json::array({"0"}));
  CHECK(j["result"]["monoid"]["prime_classes"] == json::parse(R"([["-2"],["-1"],["1"],["2"]])"));
  CHECK(j["result"]["domain"]["class_group"]["invariant_factors"] == json::array({"2"}));
  CHECK(j["result"]["domain"]["order"] == "2");
  const auto z = krullkit({"classgroup", "--domain", "Z", "--json"});
  CHECK(z.response()["result"]["domain"]["class_group"]["trivial"] == true);
}

TEST_CASE("exit codes") {
  CHECK(krullkit({"classgroup", "--domain", "R"}).code == cli::kSchema);
  CHECK(krullkit({"primes-in-class", "--domain", "Z"}).code == cli::kSchema);  // no group
  CHECK(krullkit({"frobnicate"}).code == cli::kSchema);
  const auto pre = krullkit({"check-irreducible", "--free", "1", "--element", "4@0;1@1", "--mode", "eisenstein",
                             "--prime", "2", "--json"});
  CHECK(pre.code == cli::kPrecondition);
  CHECK(pre.response()["error"]["clause"] == "trailing-valuation");
  CHECK(krullkit({"primes-in-class", "--free", "1", "--alpha=-1"}).code == cli::kPrecondition);
  CHECK(krullkit({"divisor-theory-check", "--weights=-2,-1,1,2", "--bound", "0"}).code == cli::kExhausted);
  CHECK(krullkit({"check-irreducible", "--free", "1", "--element", "1@0;1@9"}).code == cli::kExhausted);
  const auto bad = krullkit({"counterexample", "--alpha", "1,1,1,1", "--bound", "3", "--json"});
  CHECK(bad.code == cli::kVerificationFailed);
  CHECK(bad.response()["status"] == "failed");
  CHECK(krullkit({"counterexample", "--bound", "4"}).code == 0);
}

TEST_CASE("counterexample report") {
  const auto r = krullkit({"counterexample", "--bound", "20", "--json"});
  REQUIRE(r.code == 0);
  const json res = r.response()["result"];
  CHECK(res["search"]["min_valuation"] == "2");
  CHECK(res["identity"]["holds"] == true);
  CHECK(res["statement"] == "no witness; minimum over all tested (a,i) = 2");
}

TEST_CASE("primes-in-class with replay") {
  const auto r = krullkit({"primes-in-class", "--domain", "Z[sqrt(-5)]", "--weights=-2,-1,1,2", "--I",
                           "2,1+sqrt(-5)", "--J=0,0,-1,0", "--count", "3", "--reverify", "--json"});
  REQUIRE(r.code == 0);
  const json res = r.response()["result"];
  CHECK(res["certificates"].size() == 3);
  CHECK(res["reverify"]["ok"] == true);
  CHECK(res["pairwise_non_associated"] == true);
  CHECK(res["target"]["domain_class"] == json::array({"1"}));
  CHECK(res["target"]["monoid_class"] == json::array({"-1"}));
  for (const auto& c : res["certificates"]) CHECK(c["domain_class"] == res["target"]["domain_class"]);

  const auto field = krullkit({"primes-in-class", "--domain", "Q", "--weights=-2,-1,1,2", "--count", "20", "--json"});
  CHECK(field.code == cli::kExhausted);
  CHECK(field.response()["status"] == "inconclusive");

  const auto shifted = krullkit({"primes-in-class", "--free", "1", "--count", "3", "--json"});
  REQUIRE(shifted.code == 0);
  CHECK(shifted.response()["result"]["certificates"][2]["element"]["text"] == "5 + 1*X^(1)");
}

TEST_CASE("identical requests give identical bytes") {
  const std::vector<std::string> a{"intersection-check", "--weights=-1,1", "--element", "2@0;1@1", "--seed", "7",
                                   "--json"};
  CHECK(krullkit(a).code == 0);
  CHECK(krullkit(a).out == krullkit(a).out);
  auto b = a;
  b[5] = "8";
  CHECK(krullkit(b).out != krullkit(a).out);
}

TEST_CASE("request files") {
  const std::string path = "krullkit_request_test.json";
  {
    std::ofstream f(path);
    f << R"({"command": "check-irreducible", "group": {"free": "2"},
             "element": {"terms": [{"coeff": "1", "exp": ["1", "0"]}, {"coeff": "-1", "exp": ["0", "1"]}]}})";
  }
  const auto r = krullkit({"check-irreducible", "--request", path, "--json"});
  CHECK(r.code == 0);
  CHECK(r.response()["result"]["oracle"]["verdict"] == "irreducible");
  CHECK(krullkit({"intersection-check", "--request", path}).code == cli::kSchema);  // command mismatch
  {
    std::ofstream f(path);
    f << R"({"command": "counterexample", "colour": "blue"})";
  }
  CHECK(krullkit({"counterexample", "--request", path}).code == cli::kSchema);
  {
    std::ofstream f(path);
    f << "{not json";
  }
  CHECK(krullkit({"counterexample", "--request", path}).code == cli::kSchema);
  std::remove(path.c_str());
}

TEST_CASE("factor bound from the environment") {
  setenv("KRULLKIT_FACTOR_BOUND", "100", 1);
  const auto r = krullkit({"primes-in-class", "--free", "1", "--I", "999983", "--count", "1"});
  unsetenv("KRULLKIT_FACTOR_BOUND");
  CHECK(r.code == cli::kExhausted);
  CHECK(krullkit({"primes-in-class", "--free", "1", "--I", "999983", "--count", "1"}).code == 0);
  setenv("KRULLKIT_FACTOR_BOUND", "lots", 1);
  CHECK(krullkit({"classgroup", "--domain", "Z"}).code == cli::kSchema);
  unsetenv("KRULLKIT_FACTOR_BOUND");
}
