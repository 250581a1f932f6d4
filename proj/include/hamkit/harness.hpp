#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamkit/conditions.hpp"
#include "hamkit/error.hpp"
#include "hamkit/graph.hpp"
#include "hamkit/insertion.hpp"
#include "hamkit/invariants.hpp"
#include "hamkit/io.hpp"
#include "hamkit/oracle.hpp"
#include "hamkit/rational.hpp"

namespace hamkit {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// xorshift64* (Marsaglia shifts 12/25/27, multiplier 0x2545F4914F6CDD1D).
// State must be non-zero.
class xorshift64star {
 public:
  explicit xorshift64star(std::uint64_t seed) : state_(seed ? seed : 1) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }

  // Uniform in [0, bound), by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

  bool chance(const rational& p) {
    return below(static_cast<std::uint64_t>(p.denominator())) <
           static_cast<std::uint64_t>(p.numerator());
  }

 private:
  std::uint64_t state_;
};

// Per-sample stream: splitmix64 folded over (seed, n, p, index).
inline xorshift64star sample_stream(std::uint64_t seed, int n,
                                    const rational& p, std::uint64_t index) {
  std::uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ static_cast<std::uint64_t>(n));
  s = splitmix64(s ^ static_cast<std::uint64_t>(p.numerator()));
  s = splitmix64(s ^ static_cast<std::uint64_t>(p.denominator()));
  s = splitmix64(s ^ index);
  return xorshift64star(s);
}

// G(n,p): pairs (u,v), u < v, in lexicographic order, each an edge when the
// stream's next draw below denominator(p) is under numerator(p).
inline graph random_graph(int n, const rational& p, xorshift64star& rng) {
  if (p < 0 || p > 1) throw invalid_probability("p must lie in [0,1]");
  if (n < 0) throw invalid_params("n must be non-negative");
  std::vector<edge> es;
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) es.emplace_back(u, v);
  return graph::from_edge_list(n, es);
}

inline graph random_graph(int n, const rational& p, std::uint64_t seed,
                          std::uint64_t index) {
  if (p < 0 || p > 1) throw invalid_probability("p must lie in [0,1]");
  auto rng = sample_stream(seed, n, p, index);
  return random_graph(n, p, rng);
}

struct corpus_spec {
  int n_min = 3;
  int n_max = 3;
  int samples_per_n = 1;
  // One entry is a fixed p; several are swept by sample index.
  std::vector<rational> probabilities{rational(1, 2)};
  std::uint64_t seed = 0;
  std::optional<std::size_t> limit;  // truncate the corpus

  void validate() const {
    if (n_min < 3 || n_min > n_max)
      throw invalid_params("corpus needs 3 <= n_min <= n_max");
    if (samples_per_n < 1) throw invalid_params("corpus needs samples >= 1");
    if (probabilities.empty()) throw invalid_params("corpus needs some p");
    for (const auto& p : probabilities)
      if (p < 0 || p > 1) throw invalid_probability("p must lie in [0,1]");
  }

  std::size_t size() const {
    const std::size_t full =
        static_cast<std::size_t>(samples_per_n) * (n_max - n_min + 1);
    return limit ? std::min(full, *limit) : full;
  }
};

// The "sweep" probability set.
inline std::vector<rational> sweep_probabilities() {
  return {rational(3, 10), rational(1, 2), rational(7, 10)};
}

struct corpus_sample {
  std::size_t index = 0;
  int n = 0;
  rational p;
  graph g;
};

// Sample i has n = n_min + i mod R (R = number of orders) and p =
// probabilities[(i / R) mod P], so every prefix of the corpus mixes orders.
inline corpus_sample corpus_at(const corpus_spec& spec, std::size_t i) {
  const std::size_t orders = spec.n_max - spec.n_min + 1;
  corpus_sample s;
  s.index = i;
  s.n = spec.n_min + static_cast<int>(i % orders);
  s.p = spec.probabilities[(i / orders) % spec.probabilities.size()];
  s.g = random_graph(s.n, s.p, spec.seed, i);
  return s;
}

struct violation {
  std::size_t sample = 0;
  std::string graph6;
  std::string check;
  std::string detail;
};

struct campaign_result {
  std::string campaign;
  std::size_t graphs_tested = 0;
  std::vector<violation> violations;
  std::map<std::string, std::size_t> counters;
  double elapsed_seconds = 0;

  bool passed() const { return violations.empty(); }
};

namespace detail {

class stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

inline void record(campaign_result& r, const corpus_sample& s,
                   std::string check, std::string detail) {
  r.violations.push_back(
      {s.index, write_graph6(s.g), std::move(check), std::move(detail)});
}

inline std::vector<int> k_values(int k_min, int k_max) {
  if (k_min < 1 || k_min > k_max) throw invalid_k("k range must be 1 <= a <= b");
  std::vector<int> ks;
  for (int k = k_min; k <= k_max; ++k) ks.push_back(k);
  return ks;
}

// Lazily evaluated exact Hamiltonicity of one sample.
class lazy_oracle {
 public:
  explicit lazy_oracle(const graph& g) : g_(g) {}
  const search_result& get() {
    if (!result_) result_ = hamiltonian_cycle(g_);
    return *result_;
  }

 private:
  const graph& g_;
  std::optional<search_result> result_;
};

}  // namespace detail

// Whenever MAIN(k) is applicable and holds, the exact oracle must find a
// Hamiltonian cycle.
inline campaign_result verify_main_theorem(const corpus_spec& spec, int k_min,
                                           int k_max) {
  spec.validate();
  if (spec.n_max > 16) throw invalid_params("main-theorem campaign needs n <= 16");
  const auto ks = detail::k_values(k_min, k_max);
  detail::stopwatch clock;
  campaign_result r;
  r.campaign = "main-theorem";
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const auto s = corpus_at(spec, i);
    const graph_facts facts(s.g);
    detail::lazy_oracle oracle(s.g);
    ++r.graphs_tested;
    for (int k : ks) {
      const auto rep = check(facts, {condition_id::main, k});
      if (!rep.applicable) continue;
      ++r.counters["applicable"];
      if (!rep.holds) continue;
      ++r.counters["holds"];
      const auto& h = oracle.get();
      if (!h.exact) {
        detail::record(r, s, "oracle-budget", "MAIN(" + std::to_string(k) + ")");
      } else if (!h.cycle) {
        detail::record(r, s, "MAIN(" + std::to_string(k) + ")",
                       "condition holds (lhs " + rep.lhs.str() + ", rhs " +
                           std::to_string(rep.rhs) +
                           ") but no Hamiltonian cycle exists");
      }
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

// Whenever BONDY(k) holds, CHVATAL_ERDOS or MAIN(k) holds as well.
inline campaign_result implication_scan(const corpus_spec& spec, int k_min,
                                        int k_max) {
  spec.validate();
  const auto ks = detail::k_values(k_min, k_max);
  detail::stopwatch clock;
  campaign_result r;
  r.campaign = "implication-scan";
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const auto s = corpus_at(spec, i);
    const graph_facts facts(s.g);
    ++r.graphs_tested;
    const bool ce = check(facts, {condition_id::chvatal_erdos}).holds;
    for (int k : ks) {
      if (!check(facts, {condition_id::bondy, k}).holds) continue;
      ++r.counters["bondy_holds"];
      if (ce) ++r.counters["chvatal_erdos_escape"];
      if (!ce && !check(facts, {condition_id::main, k}).holds)
        detail::record(r, s, "BONDY=>MAIN(" + std::to_string(k) + ")",
                       "BONDY holds but neither CHVATAL_ERDOS nor MAIN do");
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

// Every applicable, satisfied condition among the standard set must agree
// with the oracle.
inline campaign_result verify_soundness(const corpus_spec& spec, int k_min,
                                        int k_max) {
  spec.validate();
  if (spec.n_max > 16) throw invalid_params("soundness campaign needs n <= 16");
  const auto conds = standard_conditions(detail::k_values(k_min, k_max));
  detail::stopwatch clock;
  campaign_result r;
  r.campaign = "soundness";
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const auto s = corpus_at(spec, i);
    const graph_facts facts(s.g);
    detail::lazy_oracle oracle(s.g);
    ++r.graphs_tested;
    for (const auto& c : conds) {
      const auto rep = check(facts, c);
      if (!rep.holds) continue;
      ++r.counters[c.name()];
      const auto& h = oracle.get();
      if (!h.exact || !h.cycle)
        detail::record(r, s, c.name(),
                       h.exact ? "holds on a non-Hamiltonian graph"
                               : "oracle budget exceeded");
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

struct lemma_campaign_options {
  // Stop after this many connected non-Hamiltonian samples were checked.
  std::optional<std::size_t> target;
  // Third C-path of crossing patterns 3 and 4 must avoid H0.
  bool crossing_avoid_h0 = true;
};

// On each connected non-Hamiltonian sample: take an exact longest cycle C,
// and for every component H0 of G - C check that a frame exists (every
// attachment arc has a non-insertible vertex), that X + x0 is independent for
// every x0 in H0, the degree bound d_C(x_i) <= |D_i| + alpha - 1, that no
// forbidden crossing occurs, and that the extension step cannot lengthen C.
inline campaign_result verify_lemmas(const corpus_spec& spec,
                                     const lemma_campaign_options& opt = {}) {
  spec.validate();
  if (spec.n_max > crossing_scan_max_vertices)
    throw invalid_params("lemma campaign needs n <= " +
                         std::to_string(crossing_scan_max_vertices));
  detail::stopwatch clock;
  campaign_result r;
  r.campaign = "lemmas";
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (opt.target && r.graphs_tested >= *opt.target) break;
    const auto s = corpus_at(spec, i);
    if (!is_connected(s.g)) {
      ++r.counters["skipped_disconnected"];
      continue;
    }
    const auto ham = hamiltonian_cycle(s.g);
    if (ham.cycle) {
      ++r.counters["skipped_hamiltonian"];
      continue;
    }
    ++r.graphs_tested;
    const auto longest = longest_cycle(s.g);
    if (!longest.exact) {
      detail::record(r, s, "oracle-budget", "longest cycle not exact");
      continue;
    }
    if (!longest.cycle) {
      ++r.counters["acyclic"];
      continue;
    }
    const auto& c = *longest.cycle;
    if (c.length() == static_cast<std::size_t>(s.n)) {
      detail::record(r, s, "oracle-agreement",
                     "longest cycle is spanning but backtracking found none");
      continue;
    }
    const int alpha = independence_number(s.g);
    std::vector<bool> on_c(s.n, false);
    for (vertex v : c.order()) on_c[v] = true;
    for (const auto& block : components(s.g, on_c)) {
      const vertex_set h0(block);
      ++r.counters["frames"];
      non_insertible_frame f;
      try {
        f = build_frame(s.g, c, h0, alpha);
      } catch (const all_insertible& e) {
        detail::record(r, s, "frame-exists", e.what());
        continue;
      }
      r.counters["attachments"] += f.records.size();
      for (vertex x0 : h0)
        if (!frame_x_independent(s.g, f, x0))
          detail::record(r, s, "frame-independent",
                         "X plus x0=" + std::to_string(x0) + " not independent");
      for (const auto& rec : f.records)
        if (!non_insertible_degree_bound(s.g, f, rec))
          detail::record(r, s, "degree-bound",
                         "x=" + std::to_string(rec.x) + " exceeds |D|+alpha-1");
      for (const auto& v : crossing_scan(s.g, f, opt.crossing_avoid_h0))
        detail::record(r, s, "crossing." + std::to_string(v.clause), v.describe());
    }
    if (auto longer = extend_cycle(s.g, c, alpha))
      detail::record(r, s, "extend-longest",
                     "extension step lengthened a longest cycle");
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

struct path_system_instance {
  graph g;
  path_system system;
  int alpha = 0;
};

// Random graphs with a random cycle D and random disjoint paths outside it,
// kept only when they satisfy the merge preconditions (I) and (II).
inline std::vector<path_system_instance> generate_path_systems(
    std::size_t count, std::uint64_t seed, int n_min, int n_max) {
  if (n_min < 4 || n_min > n_max || n_max > max_mask_vertices)
    throw invalid_params("path systems need 4 <= n_min <= n_max <= 64");
  const std::vector<rational> ps{rational(1, 2), rational(3, 5),
                                 rational(7, 10), rational(4, 5)};
  xorshift64star rng(splitmix64(seed));
  std::vector<path_system_instance> out;
  for (std::uint64_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt > 1'000'000) throw error("path-system generator stalled");
    const int n = n_min + static_cast<int>(rng.below(n_max - n_min + 1));
    const graph g = random_graph(n, ps[rng.below(ps.size())], rng);

    // Self-avoiding walk closed into a cycle once it can, with probability
    // 1/2 per step, leaving at least one vertex outside.
    std::vector<vertex> d{static_cast<vertex>(rng.below(n))};
    vertex_mask used = bit(d[0]);
    bool closed = false;
    while (!closed) {
      const vertex last = d.back();
      if (d.size() >= 3 && g.adjacent(last, d[0]) && rng.below(2) == 0) {
        closed = true;
        break;
      }
      if (static_cast<int>(d.size()) >= n - 1) break;
      std::vector<vertex> next;
      for (vertex w : g.neighbors(last))
        if (!(used & bit(w))) next.push_back(w);
      if (next.empty()) break;
      const vertex w = next[rng.below(next.size())];
      d.push_back(w);
      used |= bit(w);
    }
    if (!closed && !(d.size() >= 3 && g.adjacent(d.back(), d[0]))) continue;
    if (static_cast<int>(d.size()) >= n) continue;

    path_system sys{oriented_cycle(d), {}};
    const int wanted = 1 + static_cast<int>(rng.below(3));
    for (int p = 0; p < wanted; ++p) {
      std::vector<vertex> free;
      for (vertex v = 0; v < n; ++v)
        if (!(used & bit(v))) free.push_back(v);
      if (free.empty()) break;
      std::vector<vertex> q{free[rng.below(free.size())]};
      used |= bit(q[0]);
      const int length = 1 + static_cast<int>(rng.below(4));
      while (static_cast<int>(q.size()) < length) {
        std::vector<vertex> next;
        for (vertex w : g.neighbors(q.back()))
          if (!(used & bit(w))) next.push_back(w);
        if (next.empty()) break;
        q.push_back(next[rng.below(next.size())]);
        used |= bit(q.back());
      }
      sys.paths.push_back(std::move(q));
    }

    const int alpha = independence_number(g);
    try {
      check_merge_preconditions(g, sys, alpha);
    } catch (const precondition_i_failed&) {
      continue;
    } catch (const precondition_ii_failed&) {
      continue;
    }
    out.push_back({g, std::move(sys), alpha});
  }
  return out;
}

}  // namespace hamkit
