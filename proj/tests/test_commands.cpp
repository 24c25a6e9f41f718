// Copyright 2026 The mvfep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mvfep/commands.hpp"

#include <doctest.h>

#include "mvfep.h"
#include "mvfep/embedding.hpp"

using namespace mvfep;

namespace {

Json l6_json() { return algebra_to_json(FiniteMvAlgebra::chain(6)); }

Json boolean_square_json() {
  std::vector<FiniteMvAlgebra> fac;
  fac.push_back(FiniteMvAlgebra::chain(1));
  fac.push_back(FiniteMvAlgebra::chain(1));
  return algebra_to_json(FiniteMvAlgebra::direct_product(fac));
}

}  // namespace

TEST_CASE("algebra JSON round-trip") {
  Json j = l6_json();
  FiniteMvAlgebra alg = algebra_from_json(j);
  CHECK(alg.size() == 7);
  CHECK(algebra_to_json(alg) == j);

  CHECK_THROWS_AS(algebra_from_json(Json::array()), ParseError);
  Json bad = j;
  bad["neg"] = Json::array();
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);
  Json bad2 = j;
  bad2["oplus"][0][0] = 99;
  CHECK_THROWS_AS(algebra_from_json(bad2), ParseError);
}

TEST_CASE("system JSON round-trip") {
  Json j = parse_json(R"({"A": [["1/2", "-1"], ["0", "2"]], "b": ["1", "-3/4"]})");
  LinearSystem sys = system_from_json(j);
  CHECK(sys.rows() == 2);
  CHECK(sys.cols() == 2);
  CHECK(sys.a[0][0] == Rational(1, 2));
  CHECK(system_from_json(system_to_json(sys)).a == sys.a);

  CHECK_THROWS_AS(system_from_json(parse_json(R"({"A": [], "b": []})")), ParseError);
  CHECK_THROWS_AS(system_from_json(parse_json(R"({"A": [["1/0"]], "b": ["0"]})")), ParseError);
}

TEST_CASE("axioms bundle and its verification") {
  Json out = run_axioms(l6_json());
  CHECK(out["command"] == "axioms");
  CHECK(out["axioms_pass"] == true);
  CHECK(out["adjointness"] == true);
  CHECK(out["chain"] == true);
  CHECK(out["verified"] == true);

  Json verdict = run_verify(out);
  CHECK(verdict["verified"] == true);

  // Tampering is caught.
  Json tampered = out;
  tampered["chain"] = false;
  CHECK(run_verify(tampered)["verified"] == false);
}

TEST_CASE("axioms on a broken table reports failures but still verifies") {
  Json j = l6_json();
  j["oplus"][1][2] = 0;
  Json out = run_axioms(j);
  CHECK(out["axioms_pass"] == false);
  CHECK_FALSE(out["failures"].empty());
  CHECK(run_verify(out)["verified"] == true);
}

TEST_CASE("filters bundle modes and verification") {
  Json all = run_filters(boolean_square_json(), "all");
  CHECK(all["filters"].size() == 4);
  CHECK(all["total"] == 4);
  Json prime = run_filters(boolean_square_json(), "prime");
  CHECK(prime["filters"].size() == 3);  // two coordinates + improper
  Json ultra = run_filters(boolean_square_json(), "ultra");
  CHECK(ultra["filters"].size() == 2);
  CHECK(run_verify(all)["verified"] == true);
  CHECK(run_verify(prime)["verified"] == true);
  CHECK(run_verify(ultra)["verified"] == true);
  CHECK_THROWS_AS(run_filters(boolean_square_json(), "odd"), InvalidInput);
}

TEST_CASE("quotient bundle and verification") {
  Json out = run_quotient(boolean_square_json(), 1);
  CHECK(out["quotient"]["size"] == 2);
  CHECK(out["chain"] == true);
  CHECK(run_verify(out)["verified"] == true);
  CHECK_THROWS_AS(run_quotient(boolean_square_json(), 17), InvalidInput);
}

TEST_CASE("embed-chain bundle carries a re-checkable witness") {
  Json out = run_embed_chain("chang", "(0,1)", MVFEP_DEFAULT_ROW_CAP);
  CHECK(out["command"] == "embed-chain");
  CHECK(out["verified"] == true);
  CHECK(out["map"].size() == 1);
  CHECK(run_verify(out)["verified"] == true);

  Json tampered = out;
  for (auto& [key, value] : tampered["map"].items()) value = "0";
  CHECK(run_verify(tampered)["verified"] == false);

  Json wrong_k = out;
  wrong_k["k"] = "9999";
  CHECK(run_verify(wrong_k)["verified"] == false);
}

TEST_CASE("embed bundle carries a re-checkable witness") {
  Json out = run_embed(boolean_square_json(), MVFEP_DEFAULT_ROW_CAP);
  CHECK(out["l"] == 2);
  CHECK(out["k"] == "1");
  CHECK(run_verify(out)["verified"] == true);

  Json tampered = out;
  tampered["map"]["1"] = tampered["map"]["2"];
  CHECK(run_verify(tampered)["verified"] == false);
}

TEST_CASE("farkas bundle for both arms") {
  Json infeasible = parse_json(R"({"A": [["1"], ["-1"]], "b": ["1", "-2"]})");
  Json out = run_farkas(infeasible, MVFEP_DEFAULT_ROW_CAP);
  CHECK(out["status"] == "infeasible");
  CHECK(out["lambda_integer"] == Json::array({"1", "1"}));
  CHECK(run_verify(out)["verified"] == true);

  Json tampered = out;
  tampered["lambda"][0] = "2";
  CHECK(run_verify(tampered)["verified"] == false);

  Json feasible = parse_json(R"({"A": [["-1"]], "b": ["-1"]})");
  Json out2 = run_farkas(feasible, MVFEP_DEFAULT_ROW_CAP);
  CHECK(out2["status"] == "solution");
  CHECK(out2["x"] == Json::array({"1"}));
  CHECK(run_verify(out2)["verified"] == true);
}

TEST_CASE("byte-identical outputs for identical inputs") {
  Json a = run_embed_chain("qunit", "1/3,2/3", MVFEP_DEFAULT_ROW_CAP);
  Json b = run_embed_chain("qunit", "1/3,2/3", MVFEP_DEFAULT_ROW_CAP);
  CHECK(a.dump() == b.dump());
  Json c = run_embed(l6_json(), MVFEP_DEFAULT_ROW_CAP);
  Json d = run_embed(l6_json(), MVFEP_DEFAULT_ROW_CAP);
  CHECK(c.dump() == d.dump());
}

TEST_CASE("verify rejects junk") {
  CHECK_THROWS_AS(run_verify(parse_json("{}")), ParseError);
  CHECK_THROWS_AS(run_verify(parse_json(R"({"command": "dance"})")), ParseError);
  // A structurally incomplete bundle fails gracefully.
  Json incomplete = parse_json(R"({"command": "farkas"})");
  CHECK(run_verify(incomplete)["verified"] == false);
}

// ---------------------------------------------------------------- C API

TEST_CASE("C API: algebra lifecycle and commands") {
  std::string alg_text = l6_json().dump();
  mvfep_algebra* alg = mvfep_algebra_parse(alg_text.c_str());
  REQUIRE(alg != nullptr);
  CHECK(mvfep_algebra_size(alg) == 7);

  mvfep_result* axioms = mvfep_run_axioms(alg);
  REQUIRE(axioms != nullptr);
  CHECK(mvfep_result_status(axioms) == MVFEP_OK);
  REQUIRE(mvfep_result_json(axioms) != nullptr);
  Json bundle = parse_json(mvfep_result_json(axioms));
  CHECK(bundle["axioms_pass"] == true);

  // Round-trip through verify.
  mvfep_result* verdict = mvfep_run_verify(mvfep_result_json(axioms));
  CHECK(mvfep_result_status(verdict) == MVFEP_OK);
  mvfep_result_free(verdict);
  mvfep_result_free(axioms);
  mvfep_algebra_free(alg);
}

TEST_CASE("C API: status codes map failure classes") {
  CHECK(mvfep_algebra_parse("not json") == nullptr);
  CHECK(std::string(mvfep_last_error()).size() > 0);

  mvfep_result* parse_fail = mvfep_run_farkas("{\"A\": \"nope\"}", 0);
  CHECK(mvfep_result_status(parse_fail) == MVFEP_PARSE_ERROR);
  CHECK(mvfep_result_json(parse_fail) == nullptr);
  mvfep_result_free(parse_fail);

  mvfep_result* bad_elems = mvfep_run_embed_chain("qunit", "1/3,1/3", 0);
  CHECK(mvfep_result_status(bad_elems) == MVFEP_PARSE_ERROR);
  mvfep_result_free(bad_elems);

  mvfep_result* capped = mvfep_run_embed_chain("qunit", "1/7,2/7,3/7,4/7", 2);
  CHECK(mvfep_result_status(capped) == MVFEP_RESOURCE_ERROR);
  mvfep_result_free(capped);

  // A tampered bundle comes back as a verification failure, with output.
  Json out = run_farkas(parse_json(R"({"A": [["-1"]], "b": ["-1"]})"),
                        MVFEP_DEFAULT_ROW_CAP);
  out["x"][0] = "0";
  std::string text = out.dump();
  mvfep_result* verdict = mvfep_run_verify(text.c_str());
  CHECK(mvfep_result_status(verdict) == MVFEP_VERIFY_ERROR);
  CHECK(mvfep_result_json(verdict) != nullptr);
  mvfep_result_free(verdict);

  CHECK(std::string(mvfep_version()) == "1.0.0");
}
