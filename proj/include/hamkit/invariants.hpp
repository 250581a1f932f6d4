#pragma once

#include <algorithm>
#include <compare>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamkit/error.hpp"
#include "hamkit/graph.hpp"

namespace hamkit {

// A non-negative integer or +infinity. Infinity orders above every integer.
// There is deliberately no arithmetic: reading value() of infinity throws.
class ext_int {
 public:
  constexpr ext_int(long long v) : value_(v) {}  // NOLINT: implicit on purpose

  static constexpr ext_int infinity() {
    ext_int e(0);
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }

  long long value() const {
    if (infinite_) throw std::logic_error("arithmetic on infinite sigma");
    return value_;
  }

  friend constexpr bool operator==(const ext_int& a, const ext_int& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ext_int& a,
                                                    const ext_int& b) {
    if (a.infinite_ || b.infinite_)
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    return a.value_ <=> b.value_;
  }

  std::string str() const {
    return infinite_ ? "inf" : std::to_string(value_);
  }

 private:
  long long value_ = 0;
  bool infinite_ = false;
};

namespace detail {

// Unit vertex-capacity max flow on the split graph (v_in = 2v, v_out = 2v+1).
class vertex_flow {
 public:
  vertex_flow(const graph& g, vertex s, vertex t, bool skip_st_edge) {
    const int n = g.order();
    head_.assign(2 * n, -1);
    constexpr int big = std::numeric_limits<int>::max() / 4;
    for (vertex v = 0; v < n; ++v)
      add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
    for (vertex u = 0; u < n; ++u)
      for (vertex v : g.neighbors(u)) {
        if (skip_st_edge && ((u == s && v == t) || (u == t && v == s)))
          continue;
        add(2 * u + 1, 2 * v, big);
      }
    source_ = 2 * s + 1;
    sink_ = 2 * t;
  }

  int run(int limit = std::numeric_limits<int>::max()) {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(source_);
      via[source_] = -2;
      while (!q.empty() && via[sink_] == -1) {
        int x = q.front();
        q.pop();
        for (int e = head_[x]; e != -1; e = next_[e])
          if (cap_[e] > 0 && via[to_[e]] == -1) {
            via[to_[e]] = e;
            q.push(to_[e]);
          }
      }
      if (via[sink_] == -1) break;
      for (int x = sink_; x != source_; x = to_[via[x] ^ 1]) {
        --cap_[via[x]];
        ++cap_[via[x] ^ 1];
      }
      ++flow;
    }
    return flow;
  }

 private:
  void add(int a, int b, int c) {
    to_.push_back(b), cap_.push_back(c), next_.push_back(head_[a]);
    head_[a] = static_cast<int>(to_.size()) - 1;
    to_.push_back(a), cap_.push_back(0), next_.push_back(head_[b]);
    head_[b] = static_cast<int>(to_.size()) - 1;
  }

  std::vector<int> head_, to_, cap_, next_;
  int source_ = 0, sink_ = 0;
};

}  // namespace detail

// Maximum number of internally disjoint x-y paths; a direct edge counts as
// one path.
inline int local_connectivity(const graph& g, vertex x, vertex y) {
  check_vertex(g, x);
  check_vertex(g, y);
  if (x == y) throw same_vertex("local connectivity needs distinct vertices");
  const bool adj = g.adjacent(x, y);
  return (adj ? 1 : 0) + detail::vertex_flow(g, x, y, adj).run();
}

// Vertex connectivity. K_n gives n-1; disconnected graphs and graphs with
// fewer than two vertices give 0.
//
// Every minimum separator S either misses a fixed minimum-degree vertex v, in
// which case it separates v from some non-neighbour, or contains v, in which
// case it separates two non-adjacent neighbours of v.
inline int connectivity(const graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (g.is_complete()) return n - 1;
  if (!is_connected(g)) return 0;

  vertex v = 0;
  for (vertex u = 1; u < n; ++u)
    if (g.degree(u) < g.degree(v)) v = u;

  int best = g.degree(v);
  auto pair_flow = [&](vertex a, vertex b) {
    best = std::min(best, detail::vertex_flow(g, a, b, false).run(best));
  };
  for (vertex w = 0; w < n; ++w)
    if (w != v && !g.adjacent(v, w)) pair_flow(v, w);
  auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!g.adjacent(nb[i], nb[j])) pair_flow(nb[i], nb[j]);
  return best;
}

namespace detail {

// Number of cliques in a greedy clique partition of g[cand]; bounds the size
// of any independent subset of cand.
inline int clique_cover_bound(const graph& g, vertex_mask cand) {
  int cliques = 0;
  while (cand) {
    vertex u = lowest(cand);
    vertex_mask clique = bit(u);
    vertex_mask open = cand & g.neighbor_mask(u);
    while (open) {
      vertex w = lowest(open);
      clique |= bit(w);
      open &= g.neighbor_mask(w);
    }
    cand &= ~clique;
    ++cliques;
  }
  return cliques;
}

struct independent_search {
  const graph& g;
  vertex_mask best = 0;
  int best_size = 0;

  void expand(vertex_mask cand, vertex_mask chosen, int size) {
    // Vertices without a neighbour in cand belong to some maximum extension.
    vertex_mask free = 0;
    for_each_bit(cand, [&](vertex v) {
      if (!(g.neighbor_mask(v) & cand)) free |= bit(v);
    });
    chosen |= free;
    size += popcount(free);
    cand &= ~free;

    if (!cand) {
      if (size > best_size) {
        best_size = size;
        best = chosen;
      }
      return;
    }
    if (size + clique_cover_bound(g, cand) <= best_size) return;

    vertex pick = -1;
    int pick_deg = -1;
    for_each_bit(cand, [&](vertex v) {
      int d = popcount(g.neighbor_mask(v) & cand);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    });
    expand(cand & ~g.neighbor_mask(pick) & ~bit(pick), chosen | bit(pick),
           size + 1);
    expand(cand & ~bit(pick), chosen, size);
  }
};

}  // namespace detail

// Exact maximum independent set by branch and bound (greedy clique-cover
// bound, branching on the highest-degree candidate).
inline vertex_set maximum_independent_set(const graph& g) {
  require_mask_size(g, "maximum_independent_set");
  detail::independent_search s{g};
  s.expand(g.all_mask(), 0, 0);
  return vertex_set::from_mask(s.best);
}

inline int independence_number(const graph& g) {
  return static_cast<int>(maximum_independent_set(g).size());
}

// Bron-Kerbosch with pivoting on the complement graph.
template <typename F>
void for_each_maximal_independent_set(const graph& g, F&& report) {
  require_mask_size(g, "maximal independent sets");
  const vertex_mask all = g.all_mask();
  auto non_nb = [&](vertex v) { return all & ~g.neighbor_mask(v) & ~bit(v); };
  auto rec = [&](auto& self, vertex_mask r, vertex_mask p,
                 vertex_mask x) -> void {
    if (!p && !x) {
      report(r);
      return;
    }
    vertex pivot = -1;
    int pivot_cover = -1;
    for_each_bit(p | x, [&](vertex u) {
      int c = popcount(p & non_nb(u));
      if (c > pivot_cover) {
        pivot_cover = c;
        pivot = u;
      }
    });
    vertex_mask todo = p & ~non_nb(pivot);
    for_each_bit(todo, [&](vertex v) {
      self(self, r | bit(v), p & non_nb(v), x & non_nb(v));
      p &= ~bit(v);
      x |= bit(v);
    });
  };
  rec(rec, 0, all, 0);
}

// sigma_k for every k at once. Each independent k-set extends to a maximal
// independent set, and inside a maximal set the k smallest degrees give the
// cheapest k-subset, so scanning maximal sets suffices.
class sigma_table {
 public:
  explicit sigma_table(const graph& g) {
    for_each_maximal_independent_set(g, [&](vertex_mask m) {
      std::vector<vertex> members;
      for_each_bit(m, [&](vertex v) { members.push_back(v); });
      std::stable_sort(members.begin(), members.end(),
                       [&](vertex a, vertex b) {
                         return g.degree(a) < g.degree(b);
                       });
      if (members.size() > values_.size()) {
        values_.resize(members.size(), std::numeric_limits<long long>::max());
        witnesses_.resize(members.size());
      }
      long long sum = 0;
      for (std::size_t k = 1; k <= members.size(); ++k) {
        sum += g.degree(members[k - 1]);
        if (sum < values_[k - 1] ||
            (sum == values_[k - 1] && tie_break(members, k, k - 1))) {
          values_[k - 1] = sum;
          witnesses_[k - 1] = vertex_set(
              std::vector<vertex>(members.begin(), members.begin() + k));
        }
      }
    });
  }

  // Largest k with a finite value, i.e. the independence number.
  int alpha() const { return static_cast<int>(values_.size()); }

  ext_int operator()(int k) const {
    if (k <= 0) throw invalid_k("sigma_k requires k >= 1");
    if (k > alpha()) return ext_int::infinity();
    return values_[k - 1];
  }

  // Minimizing independent set, or nullptr when sigma_k is infinite.
  const vertex_set* witness(int k) const {
    if (k <= 0 || k > alpha()) return nullptr;
    return &witnesses_[k - 1];
  }

 private:
  // Deterministic witness among equal sums: lexicographically smallest set.
  bool tie_break(const std::vector<vertex>& members, std::size_t k,
                 std::size_t slot) const {
    vertex_set cand(std::vector<vertex>(members.begin(), members.begin() + k));
    return cand.members() < witnesses_[slot].members();
  }

  std::vector<long long> values_;
  std::vector<vertex_set> witnesses_;
};

inline ext_int sigma(const graph& g, int k) {
  if (k <= 0) throw invalid_k("sigma_k requires k >= 1");
  return sigma_table(g)(k);
}

struct invariant_profile {
  int n = 0;
  int kappa = 0;
  int alpha = 0;
  int min_degree = 0;
  std::map<int, ext_int> sigma;
};

inline invariant_profile profile(const graph& g, const std::vector<int>& ks) {
  invariant_profile p;
  p.n = g.order();
  p.kappa = connectivity(g);
  p.alpha = independence_number(g);
  p.min_degree = g.min_degree();
  if (!ks.empty()) {
    sigma_table table(g);
    for (int k : ks) p.sigma.emplace(k, table(k));
  }
  return p;
}

}  // namespace hamkit
