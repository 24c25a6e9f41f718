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

#include <algorithm>

#include "mvfep/embedding.hpp"
#include "mvfep/filters.hpp"

namespace mvfep {

namespace {

Json failures_to_json(const std::vector<AxiomFailure>& failures) {
  Json out = Json::array();
  for (const auto& f : failures) {
    out.push_back(Json{{"axiom", f.axiom}, {"witness", f.witness}});
  }
  return out;
}

Json filter_to_json(const FiniteMvAlgebra& alg, const Filter& f) {
  Json names = Json::array();
  for (int i : f.members) names.push_back(alg.name_of(i));
  return Json{{"indices", f.members}, {"elements", std::move(names)}};
}

Integer integer_from_string(const std::string& s) {
  Rational r = Rational::parse(s);
  if (!r.is_integer()) throw ParseError("expected an integer, got '" + s + "'");
  return r.num();
}

std::string verify_failure(const std::string& what) { return what; }

}  // namespace

Json run_axioms(const Json& algebra) {
  FiniteMvAlgebra alg = algebra_from_json(algebra);
  AxiomReport rep = alg.check_axioms();
  AxiomFailure adj_witness;
  bool adjoint = alg.check_adjointness(&adj_witness);

  Json input{{"algebra", algebra_to_json(alg)}};
  Json out;
  out["command"] = "axioms";
  out["input"] = input;
  out["digest"] = digest(input);
  out["axioms_pass"] = rep.ok;
  out["failures"] = failures_to_json(rep.failures);
  out["adjointness"] = adjoint;
  if (!adjoint) {
    out["adjointness_witness"] = adj_witness.witness;
  }
  out["chain"] = alg.is_chain();
  out["verified"] = true;
  return out;
}

Json run_filters(const Json& algebra, const std::string& mode) {
  if (mode != "all" && mode != "prime" && mode != "ultra") {
    throw InvalidInput("filters: mode must be all, prime or ultra");
  }
  FiniteMvAlgebra alg = algebra_from_json(algebra);
  std::vector<Filter> filters = enumerate_filters(alg);

  Json list = Json::array();
  for (std::size_t i = 0; i < filters.size(); ++i) {
    bool prime = is_prime(alg, filters[i]);
    bool ultra = is_ultra(alg, filters[i], &filters);
    if (mode == "prime" && !prime) continue;
    if (mode == "ultra" && !ultra) continue;
    Json f = filter_to_json(alg, filters[i]);
    f["id"] = static_cast<int>(i);
    f["prime"] = prime;
    f["ultra"] = ultra;
    list.push_back(std::move(f));
  }

  Json input{{"algebra", algebra_to_json(alg)}, {"mode", mode}};
  Json out;
  out["command"] = "filters";
  out["input"] = input;
  out["digest"] = digest(input);
  out["total"] = static_cast<int>(filters.size());
  out["filters"] = std::move(list);
  out["verified"] = true;
  return out;
}

Json run_quotient(const Json& algebra, int filter_id) {
  FiniteMvAlgebra alg = algebra_from_json(algebra);
  std::vector<Filter> filters = enumerate_filters(alg);
  if (filter_id < 0 || filter_id >= static_cast<int>(filters.size())) {
    throw InvalidInput("quotient: filter id " + std::to_string(filter_id) +
                       " out of range (algebra has " +
                       std::to_string(filters.size()) + " filters)");
  }
  const Filter& f = filters[static_cast<std::size_t>(filter_id)];
  QuotientAlgebra q = quotient(alg, f);

  Json input{{"algebra", algebra_to_json(alg)}, {"filter_id", filter_id}};
  Json out;
  out["command"] = "quotient";
  out["input"] = input;
  out["digest"] = digest(input);
  out["filter"] = filter_to_json(alg, f);
  out["quotient"] = algebra_to_json(q.algebra);
  out["projection"] = q.projection;
  out["chain"] = q.algebra.is_chain();
  out["prime"] = is_prime(alg, f);
  out["verified"] = true;
  return out;
}

Json run_embed_chain(const std::string& oracle_selector, const std::string& elements,
                     std::size_t row_cap) {
  std::unique_ptr<ChainOracle> oracle = make_oracle(oracle_selector);
  std::vector<ChainElem> x = parse_element_list(*oracle, elements);
  SolveOptions opts;
  opts.row_cap = row_cap;
  ChainEmbedding emb = embed_chain(*oracle, x, opts);

  Json elems = Json::array();
  for (const ChainElem& e : x) elems.push_back(oracle->format(e));
  Json input{{"algebra", oracle->name()}, {"elements", std::move(elems)}};

  Json map = Json::object();
  for (std::size_t i = 0; i < x.size(); ++i) {
    map[oracle->format(x[i])] = emb.image[i].str();
  }
  Json domain = Json::array();
  for (const ChainElem& e : emb.valuation.domain) {
    domain.push_back(oracle->format(e));
  }

  Json out;
  out["command"] = "embed-chain";
  out["input"] = input;
  out["digest"] = digest(input);
  out["k"] = emb.k.get_str();
  out["map"] = std::move(map);
  out["valuation"] = Json{{"domain", std::move(domain)},
                          {"s", rationals_to_json(emb.valuation.values)},
                          {"q", rationals_to_json(emb.valuation.q)}};
  out["verified"] = true;
  return out;
}

Json run_embed(const Json& algebra, std::size_t row_cap) {
  FiniteMvAlgebra alg = algebra_from_json(algebra);
  SolveOptions opts;
  opts.row_cap = row_cap;
  ProductEmbedding emb = embed_finite_mv(alg, opts);

  Json filters = Json::array();
  for (const Filter& f : emb.filters) filters.push_back(filter_to_json(alg, f));
  Json map = Json::object();
  for (int i = 0; i < alg.size(); ++i) {
    map[std::to_string(i)] =
        rationals_to_json(emb.image[static_cast<std::size_t>(i)]);
  }

  Json input{{"algebra", algebra_to_json(alg)}};
  Json out;
  out["command"] = "embed";
  out["input"] = input;
  out["digest"] = digest(input);
  out["k"] = emb.k.get_str();
  out["l"] = emb.l;
  out["filters"] = std::move(filters);
  out["map"] = std::move(map);
  out["verified"] = true;
  return out;
}

Json run_farkas(const Json& system, std::size_t row_cap) {
  LinearSystem sys = system_from_json(system);
  SolveOptions opts;
  opts.row_cap = row_cap;
  FeasibilityResult res = solve_inequalities(sys, opts);
  if (!verify_result(sys, res)) {
    throw Error("internal: solver result failed verification");
  }

  Json input{{"system", system_to_json(sys)}};
  Json out;
  out["command"] = "farkas";
  out["input"] = input;
  out["digest"] = digest(input);
  if (const auto* sol = std::get_if<Solution>(&res)) {
    out["status"] = "solution";
    out["x"] = rationals_to_json(sol->x);
  } else {
    const auto& cert = std::get<Certificate>(res);
    out["status"] = "infeasible";
    out["lambda"] = rationals_to_json(cert.lambda);
    Json li = Json::array();
    for (const Integer& v : integerize_certificate(cert.lambda)) {
      li.push_back(v.get_str());
    }
    out["lambda_integer"] = std::move(li);
  }
  out["verified"] = true;
  return out;
}

namespace {

// Commands that never invoke the solver are re-verified by re-running them
// on the echoed input and comparing the whole bundle.
Json verify_by_rerun(const Json& bundle, Json rerun) {
  Json failures = Json::array();
  if (rerun != bundle) {
    failures.push_back("bundle differs from a fresh run on its own input");
  }
  return failures;
}

Json verify_embed_chain_bundle(const Json& bundle) {
  Json failures = Json::array();
  std::unique_ptr<ChainOracle> oracle =
      make_oracle(bundle.at("input").at("algebra").get<std::string>());
  std::vector<ChainElem> x;
  for (const Json& e : bundle.at("input").at("elements")) {
    x.push_back(oracle->parse(e.get<std::string>()));
  }

  std::vector<ChainElem> diffs = ominus_closure(*oracle, x);

  RationalValuation val;
  val.system = build_valuation_system(*oracle, diffs);
  for (const Json& e : bundle.at("valuation").at("domain")) {
    val.domain.push_back(oracle->parse(e.get<std::string>()));
  }
  val.values = rationals_from_json(bundle.at("valuation").at("s"));
  val.q = rationals_from_json(bundle.at("valuation").at("q"));

  VerifyReport vrep = verify_valuation(val, *oracle, diffs);
  for (const std::string& f : vrep.failures) {
    failures.push_back(verify_failure("valuation: " + f));
  }

  ChainEmbedding emb;
  emb.k = integer_from_string(bundle.at("k").get<std::string>());
  emb.domain = x;
  const Json& map = bundle.at("map");
  for (const ChainElem& e : x) {
    std::string key = oracle->format(e);
    if (!map.contains(key)) {
      failures.push_back(verify_failure("map is missing element " + key));
      return failures;
    }
    emb.image.push_back(Rational::parse(map.at(key).get<std::string>()));
  }
  if (map.size() != x.size()) {
    failures.push_back(verify_failure("map has extraneous entries"));
  }
  emb.valuation = val;

  VerifyReport erep = verify_chain_embedding(*oracle, emb);
  for (const std::string& f : erep.failures) {
    failures.push_back(verify_failure("embedding: " + f));
  }

  // f = s restricted to X, and k = lcm of the image denominators.
  std::vector<Rational> nonzero;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (oracle->eq(x[i], oracle->zero())) {
      if (!emb.image[i].is_zero()) {
        failures.push_back(verify_failure("f(0) must be 0"));
      }
      continue;
    }
    auto s = val.value_of(*oracle, x[i]);
    if (!s || *s != emb.image[i]) {
      failures.push_back(verify_failure(
          "map does not restrict the valuation at " + oracle->format(x[i])));
    }
    if (!emb.image[i].is_zero()) nonzero.push_back(emb.image[i]);
  }
  Integer expect_k = nonzero.empty() ? Integer(1) : lcm_of_denominators(nonzero);
  if (expect_k != emb.k) {
    failures.push_back(verify_failure("k is not the lcm of the image denominators"));
  }
  return failures;
}

Json verify_embed_bundle(const Json& bundle) {
  Json failures = Json::array();
  FiniteMvAlgebra alg = algebra_from_json(bundle.at("input").at("algebra"));

  ProductEmbedding emb;
  emb.k = integer_from_string(bundle.at("k").get<std::string>());
  emb.l = bundle.at("l").get<int>();
  for (const Json& f : bundle.at("filters")) {
    Filter filter{f.at("indices").get<std::vector<int>>()};
    if (!is_filter(alg, filter)) {
      failures.push_back(verify_failure("claimed filter is not a filter"));
    } else if (!is_prime(alg, filter)) {
      failures.push_back(verify_failure("claimed filter is not prime"));
    }
    emb.filters.push_back(std::move(filter));
  }
  if (static_cast<int>(emb.filters.size()) != emb.l && alg.size() > 1) {
    failures.push_back(verify_failure("filter count does not match l"));
  }
  const Json& map = bundle.at("map");
  for (int i = 0; i < alg.size(); ++i) {
    std::string key = std::to_string(i);
    if (!map.contains(key)) {
      failures.push_back(verify_failure("map is missing element " + key));
      return failures;
    }
    emb.image.push_back(rationals_from_json(map.at(key)));
  }
  VerifyReport rep = verify_product_embedding(alg, emb);
  for (const std::string& f : rep.failures) {
    failures.push_back(verify_failure(f));
  }
  return failures;
}

Json verify_farkas_bundle(const Json& bundle) {
  Json failures = Json::array();
  LinearSystem sys = system_from_json(bundle.at("input").at("system"));
  const std::string status = bundle.at("status").get<std::string>();
  if (status == "solution") {
    FeasibilityResult res = Solution{rationals_from_json(bundle.at("x"))};
    if (!verify_result(sys, res)) {
      failures.push_back(verify_failure("claimed solution violates the system"));
    }
  } else if (status == "infeasible") {
    Certificate cert{rationals_from_json(bundle.at("lambda"))};
    FeasibilityResult res = cert;
    if (!verify_result(sys, res)) {
      failures.push_back(
          verify_failure("claimed certificate violates the Farkas conditions"));
    } else {
      std::vector<Integer> expect = integerize_certificate(cert.lambda);
      const Json& li = bundle.at("lambda_integer");
      bool match = li.is_array() && li.size() == expect.size();
      for (std::size_t i = 0; match && i < expect.size(); ++i) {
        match = li[i].is_string() &&
                Integer(li[i].get<std::string>(), 10) == expect[i];
      }
      if (!match) {
        failures.push_back(
            verify_failure("lambda_integer is not the integerized certificate"));
      }
    }
  } else {
    failures.push_back(verify_failure("unknown status '" + status + "'"));
  }
  return failures;
}

}  // namespace

Json run_verify(const Json& bundle) {
  if (!bundle.is_object() || !bundle.contains("command") ||
      !bundle["command"].is_string()) {
    throw ParseError("verify: input is not a witness bundle");
  }
  const std::string target = bundle["command"].get<std::string>();

  Json failures = Json::array();
  try {
    if (target == "axioms") {
      failures = verify_by_rerun(bundle, run_axioms(bundle.at("input").at("algebra")));
    } else if (target == "filters") {
      failures = verify_by_rerun(
          bundle, run_filters(bundle.at("input").at("algebra"),
                              bundle.at("input").at("mode").get<std::string>()));
    } else if (target == "quotient") {
      failures = verify_by_rerun(
          bundle, run_quotient(bundle.at("input").at("algebra"),
                               bundle.at("input").at("filter_id").get<int>()));
    } else if (target == "embed-chain") {
      failures = verify_embed_chain_bundle(bundle);
    } else if (target == "embed") {
      failures = verify_embed_bundle(bundle);
    } else if (target == "farkas") {
      failures = verify_farkas_bundle(bundle);
    } else {
      throw ParseError("verify: unknown bundle command '" + target + "'");
    }
  } catch (const Json::exception& e) {
    failures.push_back(std::string("bundle is structurally incomplete: ") + e.what());
  }

  Json out;
  out["command"] = "verify";
  out["target"] = target;
  out["digest"] = digest(bundle);
  out["verified"] = failures.empty();
  out["failures"] = std::move(failures);
  return out;
}

std::string summarize(const Json& bundle) {
  const std::string cmd = bundle.value("command", "?");
  if (cmd == "axioms") {
    return "axioms: " +
           std::string(bundle["axioms_pass"].get<bool>() ? "pass" : "fail") +
           ", adjointness " +
           std::string(bundle["adjointness"].get<bool>() ? "holds" : "fails") +
           (bundle["chain"].get<bool>() ? ", chain" : "");
  }
  if (cmd == "filters") {
    return "filters: " + std::to_string(bundle["filters"].size()) + " of " +
           std::to_string(bundle["total"].get<int>()) + " listed";
  }
  if (cmd == "quotient") {
    return "quotient: " + std::to_string(bundle["quotient"]["size"].get<int>()) +
           " classes" + (bundle["chain"].get<bool>() ? ", chain" : "");
  }
  if (cmd == "embed-chain") {
    return "embed-chain: " + std::to_string(bundle["map"].size()) +
           " elements into L_" + bundle["k"].get<std::string>() + ", verified";
  }
  if (cmd == "embed") {
    return "embed: into L_" + bundle["k"].get<std::string>() + "^" +
           std::to_string(bundle["l"].get<int>()) + ", verified";
  }
  if (cmd == "farkas") {
    return "farkas: " + bundle["status"].get<std::string>();
  }
  if (cmd == "verify") {
    return "verify[" + bundle["target"].get<std::string>() + "]: " +
           (bundle["verified"].get<bool>() ? "ok" : "FAILED");
  }
  return cmd;
}

}  // namespace mvfep
