#pragma once

// JSON views of analysis reports and campaign results. Requires nlohmann/json
// on the include path.

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "hamkit/conditions.hpp"
#include "hamkit/harness.hpp"
#include "hamkit/io.hpp"
#include "hamkit/oracle.hpp"

namespace hamkit {

using json = nlohmann::ordered_json;

inline json to_json(const ext_int& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

inline json to_json(const condition_report& r) {
  json j;
  j["id"] = to_string(r.cond.id);
  j["k"] = takes_k(r.cond.id) ? json(r.cond.k) : json(nullptr);
  j["applicable"] = r.applicable;
  j["holds"] = r.holds;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = r.rhs;
  j["margin"] = r.margin ? json(*r.margin) : json(nullptr);
  j["witness"] = r.witness ? json(r.witness->members()) : json(nullptr);
  if (r.ota_l) j["l"] = *r.ota_l;
  return j;
}

struct analysis {
  graph g;
  graph_format format = graph_format::edge_list;
  std::vector<int> ks;
  std::optional<std::uint64_t> node_budget;
};

inline json analyze_json(const analysis& a) {
  const graph_facts facts(a.g);
  json j;
  j["graph"] = {{"n", a.g.order()},
                {"format", to_string(a.format)},
                {"data", write_graph(a.g, a.format)}};
  json sigma = json::object();
  for (int k : a.ks) sigma[std::to_string(k)] = to_json(facts.sigmas(k));
  // sigma_{k+1} feeds BONDY, LI and MAIN
  for (int k : a.ks)
    sigma[std::to_string(k + 1)] = to_json(facts.sigmas(k + 1));
  j["invariants"] = {{"n", facts.n},
                     {"kappa", facts.kappa},
                     {"alpha", facts.alpha},
                     {"min_degree", facts.min_degree},
                     {"sigma", sigma}};
  json conds = json::array();
  for (const auto& c : standard_conditions(a.ks))
    conds.push_back(to_json(check(facts, c)));
  j["conditions"] = conds;
  const auto h = hamiltonian_cycle(a.g, {a.node_budget});
  j["oracle"] = {{"hamiltonian", h.cycle ? json(true)
                                 : h.exact ? json(false)
                                           : json(nullptr)},
                 {"exact", h.exact},
                 {"cycle", h.cycle ? json(h.cycle->order()) : json(nullptr)}};
  return j;
}

// Elapsed time is only included on request, so that identical inputs give
// byte-identical output.
inline json to_json(const campaign_result& r, bool with_elapsed = false) {
  json j;
  j["campaign"] = r.campaign;
  j["passed"] = r.passed();
  j["graphs_tested"] = r.graphs_tested;
  j["counters"] = json::object();
  for (const auto& [name, count] : r.counters) j["counters"][name] = count;
  j["violations"] = json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back({{"sample", v.sample},
                               {"graph6", v.graph6},
                               {"check", v.check},
                               {"detail", v.detail}});
  if (with_elapsed) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

}  // namespace hamkit
