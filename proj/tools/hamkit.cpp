// hamkit: command-line front end for the library.
//
// Exit codes: 0 success, 1 a campaign found violations, 2 usage or input
// errors.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hamkit/hamkit.hpp"
#include "hamkit/report.hpp"

using namespace hamkit;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violations = 1;
constexpr int exit_usage = 2;

struct usage_error : error {
  using error::error;
};

struct graph_input {
  std::string file;
  std::string expr;
  std::string format;  // empty: guess from file name

  void add_to(CLI::App* cmd) {
    auto* f = cmd->add_option("--file", file, "graph file (.g6 is graph6, else edge list)");
    auto* e = cmd->add_option("--expr", expr, "sequential join expression, e.g. K1+~K4+~K5+~K1");
    f->excludes(e);
    cmd->add_option("--format", format, "input format override")
        ->check(CLI::IsMember({"edge-list", "graph6"}));
  }

  graph_format resolved_format() const {
    if (format == "graph6") return graph_format::graph6;
    if (format == "edge-list") return graph_format::edge_list;
    if (!file.empty()) return guess_format(file);
    return graph_format::graph6;
  }

  graph load() const {
    if (!expr.empty()) return build(parse_join(expr));
    if (file.empty()) throw usage_error("one of --file or --expr is required");
    std::vector<std::string> warnings;
    auto g = read_graph_file(file, resolved_format(), &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return g;
  }
};

std::vector<int> parse_k_range(const std::string& text) {
  const auto dash = text.find_first_of("-:");
  try {
    int lo = std::stoi(text.substr(0, dash));
    int hi = dash == std::string::npos ? lo : std::stoi(text.substr(dash + 1));
    if (lo < 1 || hi < lo) throw invalid_k("bad k range " + text);
    std::vector<int> ks;
    for (int k = lo; k <= hi; ++k) ks.push_back(k);
    return ks;
  } catch (const std::logic_error&) {
    throw usage_error("bad k range '" + text + "' (expected a-b)");
  }
}

std::string join_vertices(const std::vector<vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    out += (i ? " " : "") + std::to_string(vs[i]);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write " + path);
  out << text;
}

// Plain-text view of an analysis.
void print_analysis(const json& j) {
  const auto& inv = j["invariants"];
  std::cout << "n=" << inv["n"] << " kappa=" << inv["kappa"]
            << " alpha=" << inv["alpha"] << " min_degree=" << inv["min_degree"]
            << "\n";
  for (const auto& [k, v] : inv["sigma"].items())
    std::cout << "sigma_" << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump())
              << "\n";
  for (const auto& c : j["conditions"]) {
    std::string name = c["id"].get<std::string>();
    if (!c["k"].is_null()) name += "(" + c["k"].dump() + ")";
    std::cout << name << ": ";
    if (!c["applicable"].get<bool>()) {
      std::cout << "not applicable\n";
      continue;
    }
    std::cout << (c["holds"].get<bool>() ? "holds" : "fails")
              << " lhs=" << (c["lhs"].is_string() ? c["lhs"].get<std::string>() : c["lhs"].dump())
              << " rhs=" << c["rhs"];
    if (!c["margin"].is_null()) std::cout << " margin=" << c["margin"];
    if (c.contains("l")) std::cout << " l=" << c["l"];
    std::cout << "\n";
  }
  const auto& o = j["oracle"];
  if (o["hamiltonian"].is_null())
    std::cout << "oracle: unknown (budget exhausted)\n";
  else if (o["hamiltonian"].get<bool>())
    std::cout << "oracle: hamiltonian (exact): "
              << join_vertices(o["cycle"].get<std::vector<vertex>>()) << "\n";
  else
    std::cout << "oracle: non-hamiltonian (exact)\n";
}

corpus_spec make_corpus(int n_min, int n_max, int samples, const std::string& p,
                        std::uint64_t seed, std::vector<rational> default_ps) {
  corpus_spec s;
  s.n_min = n_min;
  s.n_max = n_max;
  s.samples_per_n = samples;
  s.seed = seed;
  if (p.empty())
    s.probabilities = std::move(default_ps);
  else if (p == "sweep")
    s.probabilities = sweep_probabilities();
  else
    s.probabilities = {parse_rational(p)};
  s.validate();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonicity condition toolkit"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "invariants, conditions and oracle for one graph");
  graph_input analyze_in;
  analyze_in.add_to(analyze);
  std::vector<int> analyze_k;
  std::string analyze_range;
  bool analyze_as_json = false;
  std::optional<std::uint64_t> analyze_budget;
  analyze->add_option("--k", analyze_k, "values of k (repeatable)")->check(CLI::PositiveNumber);
  analyze->add_option("--k-range", analyze_range, "k range a-b");
  analyze->add_flag("--json", analyze_as_json, "print the JSON report");
  analyze->add_option("--budget", analyze_budget, "oracle node budget");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->require_subcommand(1);
  gen->fallthrough();
  std::string gen_out, gen_format;
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen->add_option("--format", gen_format, "output format (default from file name)")
      ->check(CLI::IsMember({"edge-list", "graph6"}));
  g1_params g1p;
  auto* gen_g1 = gen->add_subcommand("g1", "K1 + ~K(kappa) + ~K(m) + ~K(n-m-kappa-1)");
  gen_g1->add_option("--k", g1p.k)->required();
  gen_g1->add_option("--kappa", g1p.kappa)->required();
  gen_g1->add_option("--m", g1p.m)->required();
  gen_g1->add_option("--n", g1p.n)->required();
  g2_params g2p;
  auto* gen_g2 = gen->add_subcommand("g2", "two-level join family");
  gen_g2->add_option("--kappa", g2p.kappa)->required();
  gen_g2->add_option("--r", g2p.r)->required();
  gen_g2->add_option("--k", g2p.k)->required();
  gen_g2->add_option("--m", g2p.m)->required();
  int eps_k = 0;
  std::string eps_text;
  auto* gen_eps = gen->add_subcommand("g1-epsilon", "smallest G1 instance for a given epsilon");
  gen_eps->add_option("--k", eps_k)->required();
  gen_eps->add_option("--eps", eps_text, "positive rational, e.g. 1/3")->required();
  std::string gen_expr_text;
  auto* gen_expr = gen->add_subcommand("expr", "build a join expression");
  gen_expr->add_option("expression", gen_expr_text)->required();
  std::string classic_name;
  std::vector<int> classic_sizes;
  auto* gen_classic = gen->add_subcommand("classic", "complete, empty, cycle, path, complete-bipartite, petersen");
  gen_classic->add_option("name", classic_name)->required();
  gen_classic->add_option("sizes", classic_sizes);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact Hamiltonian cycle or longest cycle");
  graph_input oracle_in;
  oracle_in.add_to(oracle);
  bool oracle_longest = false;
  std::optional<std::uint64_t> oracle_budget;
  oracle->add_flag("--longest", oracle_longest, "report a longest cycle instead");
  oracle->add_option("--budget", oracle_budget, "search node budget");

  // extend
  auto* extend = app.add_subcommand("extend", "one cycle-extension step");
  graph_input extend_in;
  extend_in.add_to(extend);
  std::string extend_cycle_text;
  extend->add_option("--cycle", extend_cycle_text, "comma-separated cycle")->required();

  // search
  auto* search = app.add_subcommand("search", "random counterexample search for MAIN(k) and the BONDY chain");
  int s_n_min = 6, s_n_max = 12, s_samples = 100;
  std::string s_p = "sweep", s_range = "1-4";
  std::uint64_t s_seed = 1;
  bool s_elapsed = false;
  search->add_option("--n-min", s_n_min);
  search->add_option("--n-max", s_n_max);
  search->add_option("--samples", s_samples, "samples per order");
  search->add_option("--p", s_p, "edge probability or 'sweep'");
  search->add_option("--seed", s_seed);
  search->add_option("--k-range", s_range);
  search->add_flag("--elapsed", s_elapsed, "include wall time in the JSON");

  // verify-lemmas
  auto* lemmas = app.add_subcommand("verify-lemmas", "frame and crossing checks on longest cycles");
  int l_n_min = 6, l_n_max = 12, l_samples = 100;
  std::string l_p;
  std::uint64_t l_seed = 1;
  std::optional<std::size_t> l_target;
  bool l_elapsed = false;
  lemmas->add_option("--n-min", l_n_min);
  lemmas->add_option("--n-max", l_n_max);
  lemmas->add_option("--samples", l_samples, "samples per order");
  lemmas->add_option("--p", l_p, "edge probability or 'sweep' (default 3/10, 2/5, 1/2)");
  lemmas->add_option("--seed", l_seed);
  lemmas->add_option("--target", l_target, "stop after this many checked graphs");
  lemmas->add_flag("--elapsed", l_elapsed, "include wall time in the JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*analyze) {
      analysis a{analyze_in.load(), analyze_in.resolved_format(), {}, analyze_budget};
      a.ks = analyze_k;
      if (!analyze_range.empty())
        for (int k : parse_k_range(analyze_range)) a.ks.push_back(k);
      if (a.ks.empty()) a.ks = {1, 2, 3};
      std::sort(a.ks.begin(), a.ks.end());
      a.ks.erase(std::unique(a.ks.begin(), a.ks.end()), a.ks.end());
      const auto j = analyze_json(a);
      if (analyze_as_json)
        std::cout << j.dump(2) << "\n";
      else
        print_analysis(j);
      return exit_ok;
    }

    if (*gen) {
      graph g;
      if (*gen_g1) {
        g = generate_g1(g1p).g;
      } else if (*gen_g2) {
        g = generate_g2(g2p).g;
      } else if (*gen_eps) {
        const auto inst = generate_g1_epsilon(eps_k, parse_rational(eps_text));
        const auto& c = inst.certificate;
        std::cerr << "G1(" << c.params.k << "," << c.params.kappa << ","
                  << c.params.m << "," << c.params.n << ") sigma=" << c.sigma
                  << " bound=" << to_string(c.bound)
                  << (c.holds ? " holds" : " fails") << ", cut leaves "
                  << c.cut.component_count << " components of G-S, |S|="
                  << c.cut.cut.size() << "\n";
        g = inst.family.g;
      } else if (*gen_expr) {
        g = build(parse_join(gen_expr_text));
      } else {
        g = classic::by_name(classic_name, classic_sizes);
      }
      graph_format f = gen_out.empty() ? graph_format::edge_list : guess_format(gen_out);
      if (gen_format == "graph6") f = graph_format::graph6;
      if (gen_format == "edge-list") f = graph_format::edge_list;
      emit(write_graph(g, f), gen_out);
      return exit_ok;
    }

    if (*oracle) {
      const graph g = oracle_in.load();
      const search_options opt{oracle_budget};
      const auto r = oracle_longest ? longest_cycle(g, opt) : hamiltonian_cycle(g, opt);
      const char* exactness = r.exact ? "exact" : "inexact";
      if (oracle_longest) {
        if (r.cycle)
          std::cout << "longest cycle length " << r.cycle->length() << " ("
                    << exactness << "): " << join_vertices(r.cycle->order()) << "\n";
        else
          std::cout << (r.exact ? "acyclic (exact)" : "no cycle found (inexact)") << "\n";
      } else if (r.cycle) {
        std::cout << "hamiltonian (exact): " << join_vertices(r.cycle->order()) << "\n";
      } else {
        std::cout << (r.exact ? "non-hamiltonian (exact)" : "unknown (budget exhausted)")
                  << "\n";
      }
      return exit_ok;
    }

    if (*extend) {
      const graph g = extend_in.load();
      std::vector<vertex> order;
      std::stringstream ss(extend_cycle_text);
      for (std::string item; std::getline(ss, item, ',');) {
        try {
          order.push_back(std::stoi(item));
        } catch (const std::logic_error&) {
          throw usage_error("bad cycle entry '" + item + "'");
        }
      }
      if (!is_valid_cycle(g, order)) throw usage_error("--cycle is not a cycle of the graph");
      const oriented_cycle c(order);
      if (auto longer = extend_cycle(g, c, independence_number(g)))
        std::cout << "extended to length " << longer->length() << ": "
                  << join_vertices(longer->order()) << "\n";
      else
        std::cout << "no extension (length " << c.length() << ")\n";
      return exit_ok;
    }

    if (*search) {
      const auto spec = make_corpus(s_n_min, s_n_max, s_samples, s_p, s_seed,
                                    sweep_probabilities());
      const auto ks = parse_k_range(s_range);
      const auto main = verify_main_theorem(spec, ks.front(), ks.back());
      const auto chain = implication_scan(spec, ks.front(), ks.back());
      json j = json::array({to_json(main, s_elapsed), to_json(chain, s_elapsed)});
      std::cout << j.dump(2) << "\n";
      return main.passed() && chain.passed() ? exit_ok : exit_violations;
    }

    if (*lemmas) {
      const auto spec = make_corpus(l_n_min, l_n_max, l_samples, l_p, l_seed,
                                    {rational(3, 10), rational(2, 5), rational(1, 2)});
      lemma_campaign_options opt;
      opt.target = l_target;
      const auto r = verify_lemmas(spec, opt);
      std::cout << to_json(r, l_elapsed).dump(2) << "\n";
      return r.passed() ? exit_ok : exit_violations;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
