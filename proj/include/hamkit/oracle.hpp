#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hamkit/error.hpp"
#include "hamkit/graph.hpp"

namespace hamkit {

// A cycle with a fixed orientation: order()[i+1] is the successor of
// order()[i], wrapping around. Arc queries follow the usual bracket
// convention: arc(x, y, true, false) is C[x,y), and so on. For x == y the open
// arc C(x,x) runs once around the cycle and excludes x.
class oriented_cycle {
 public:
  oriented_cycle() = default;
  explicit oriented_cycle(std::vector<vertex> order) : order_(std::move(order)) {
    vertex top = -1;
    for (vertex v : order_) top = std::max(top, v);
    pos_.assign(static_cast<std::size_t>(top + 1), -1);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (order_[i] < 0) throw index_out_of_range("negative cycle vertex");
      pos_[order_[i]] = static_cast<int>(i);
    }
  }

  const std::vector<vertex>& order() const { return order_; }
  std::size_t length() const { return order_.size(); }

  bool contains(vertex v) const {
    return v >= 0 && v < static_cast<vertex>(pos_.size()) && pos_[v] >= 0;
  }
  int index_of(vertex v) const {
    if (!contains(v))
      throw index_out_of_range("vertex " + std::to_string(v) +
                               " is not on the cycle");
    return pos_[v];
  }
  vertex at(long long i) const {
    const long long len = static_cast<long long>(order_.size());
    return order_[static_cast<std::size_t>(((i % len) + len) % len)];
  }
  vertex succ(vertex v) const { return at(index_of(v) + 1); }
  vertex pred(vertex v) const { return at(index_of(v) - 1); }

  // Number of steps from x forward to y (0 when equal).
  int distance(vertex x, vertex y) const {
    const int len = static_cast<int>(order_.size());
    return ((index_of(y) - index_of(x)) % len + len) % len;
  }

  std::vector<vertex> arc(vertex x, vertex y, bool include_x,
                          bool include_y) const {
    std::vector<vertex> out;
    if (x == y) {
      if (include_x || include_y) return {x};
      for (int i = 1; i < static_cast<int>(order_.size()); ++i)
        out.push_back(at(index_of(x) + i));
      return out;
    }
    const int steps = distance(x, y);
    for (int i = include_x ? 0 : 1; i <= (include_y ? steps : steps - 1); ++i)
      out.push_back(at(index_of(x) + i));
    return out;
  }

  // True when v lies on the open arc C(x,y).
  bool strictly_between(vertex x, vertex v, vertex y) const {
    if (!contains(v) || v == x) return false;
    if (x == y) return true;
    return distance(x, v) < distance(x, y) && v != y;
  }

  friend bool operator==(const oriented_cycle&, const oriented_cycle&) =
      default;

 private:
  std::vector<vertex> order_;
  std::vector<int> pos_;
};

// Independent validity check: length >= 3, distinct in-range vertices, and
// consecutive vertices (last to first included) adjacent in g.
inline bool is_valid_cycle(const graph& g, const std::vector<vertex>& order) {
  if (order.size() < 3) return false;
  std::vector<bool> seen(g.order(), false);
  for (vertex v : order) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!g.adjacent(order[i], order[(i + 1) % order.size()])) return false;
  return true;
}

struct search_options {
  // Search nodes (backtracking) or DP states (longest cycle) allowed before
  // giving up; unlimited when empty.
  std::optional<std::uint64_t> node_budget;
};

struct search_result {
  std::optional<oriented_cycle> cycle;
  bool exact = true;  // false: budget hit, `cycle` empty means "unknown"
  std::uint64_t nodes = 0;
};

namespace detail {

// Does g[mask] plus the edge (a,b) have a cut vertex? Masks only, n <= 64.
inline bool has_cut_vertex(const graph& g, vertex_mask mask, vertex a,
                           vertex b) {
  if (popcount(mask) < 3) return false;
  auto nb = [&](vertex v) {
    vertex_mask m = g.neighbor_mask(v) & mask;
    if (v == a) m |= bit(b);
    if (v == b) m |= bit(a);
    return m & ~bit(v);
  };
  int disc[64], low[64], timer = 0;
  std::fill(disc, disc + 64, -1);
  bool cut = false;
  auto dfs = [&](auto& self, vertex v, vertex parent) -> void {
    disc[v] = low[v] = timer++;
    int children = 0;
    for_each_bit(nb(v), [&](vertex w) {
      if (cut) return;
      if (disc[w] < 0) {
        ++children;
        self(self, w, v);
        low[v] = std::min(low[v], low[w]);
        if (parent >= 0 && low[w] >= disc[v]) cut = true;
      } else if (w != parent) {
        low[v] = std::min(low[v], disc[w]);
      }
    });
    if (parent < 0 && children > 1) cut = true;
  };
  dfs(dfs, lowest(mask), -1);
  return cut;
}

inline bool mask_connected(const graph& g, vertex_mask mask) {
  if (!mask) return true;
  vertex_mask seen = bit(lowest(mask)), frontier = seen;
  while (frontier) {
    vertex_mask next = 0;
    for_each_bit(frontier, [&](vertex v) { next |= g.neighbor_mask(v); });
    next &= mask & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

class hamiltonian_search {
 public:
  hamiltonian_search(const graph& g, const search_options& opt)
      : g_(g),
        all_(g.all_mask()),
        budget_(opt.node_budget.value_or(
            std::numeric_limits<std::uint64_t>::max())) {}

  search_result run() {
    search_result r;
    const int n = g_.order();
    bool hopeless = n < 3 || !mask_connected(g_, all_);
    for (vertex v = 0; v < n && !hopeless; ++v)
      hopeless = g_.degree(v) < 2;
    if (!hopeless) {
      path_ = {0};
      if (dfs(0, bit(0))) r.cycle = oriented_cycle(path_);
    }
    r.exact = !aborted_;
    r.nodes = nodes_;
    return r;
  }

 private:
  bool dfs(vertex cur, vertex_mask visited) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (visited == all_)
      return g_.adjacent(cur, 0) && path_[1] < cur;

    const vertex_mask unvisited = all_ & ~visited;
    const vertex_mask avail = unvisited | bit(cur) | bit(0);

    // The last vertex must be a neighbour of 0 above path_[1].
    if (path_.size() >= 2) {
      vertex_mask closers = g_.neighbor_mask(0) & (unvisited | bit(cur));
      closers &= ~((bit(path_[1]) << 1) - 1);
      if (!closers) return false;
    }

    // Degree pruning and forcing: a vertex with exactly two usable edges must
    // use both, so if one of them goes to cur it has to come next.
    vertex forced = -1;
    vertex_mask bad = 0;
    for_each_bit(unvisited, [&](vertex v) {
      vertex_mask usable = g_.neighbor_mask(v) & avail;
      int a = popcount(usable);
      if (a < 2) bad = 1;
      else if (a == 2 && cur != 0 && (usable & bit(cur))) {
        if (forced >= 0) bad = 1;
        forced = v;
      }
    });
    if (bad) return false;

    if (!mask_connected(g_, avail)) return false;
    if (cur != 0 && has_cut_vertex(g_, avail, cur, 0)) return false;

    vertex_mask cand = g_.neighbor_mask(cur) & unvisited;
    if (forced >= 0) cand &= bit(forced);
    bool found = false;
    for_each_bit(cand, [&](vertex v) {
      if (found || aborted_) return;
      if (cur == 0) {
        // Orientation: second vertex below the last one.
        vertex_mask higher = g_.neighbor_mask(0) & unvisited & ~bit(v) &
                             ~((bit(v) << 1) - 1);
        if (!higher) return;
      }
      path_.push_back(v);
      if (dfs(v, visited | bit(v))) {
        found = true;
        return;
      }
      path_.pop_back();
    });
    return found;
  }

  const graph& g_;
  vertex_mask all_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<vertex> path_;
};

}  // namespace detail

// Exact Hamiltonian cycle by backtracking from vertex 0. The returned cycle
// starts at 0 and its second vertex is smaller than its last.
inline search_result hamiltonian_cycle(const graph& g,
                                       const search_options& opt = {}) {
  require_mask_size(g, "hamiltonian_cycle");
  return detail::hamiltonian_search(g, opt).run();
}

// Largest order for which longest_cycle runs its subset DP.
inline constexpr int longest_cycle_max_vertices = 24;

// Exact longest cycle by dynamic programming over vertex subsets: reach[S]
// holds the endpoints v of paths that start at min(S), cover exactly S, and
// use only vertices above min(S).
inline search_result longest_cycle(const graph& g,
                                   const search_options& opt = {}) {
  search_result r;
  const int n = g.order();
  const auto edges = g.size();
  if (edges + components(g).size() <= static_cast<std::size_t>(n))
    return r;  // forest
  if (n > longest_cycle_max_vertices) {
    r.exact = false;
    return r;
  }
  const std::uint64_t budget =
      opt.node_budget.value_or(std::numeric_limits<std::uint64_t>::max());
  const std::uint32_t states = std::uint32_t{1} << n;
  std::vector<std::uint32_t> reach(states, 0);
  for (vertex s = 0; s < n; ++s) reach[std::uint32_t{1} << s] = 1u << s;

  std::uint32_t best_mask = 0;
  vertex best_end = -1;
  for (std::uint32_t mask = 1; mask < states; ++mask) {
    std::uint32_t ends = reach[mask];
    if (!ends) continue;
    if (++r.nodes > budget) {
      r.exact = false;
      return r;
    }
    const vertex s = std::countr_zero(mask);
    const std::uint32_t above = ~((2u << s) - 1);
    const int size = std::popcount(mask);
    while (ends) {
      const vertex v = std::countr_zero(ends);
      ends &= ends - 1;
      const auto nv = static_cast<std::uint32_t>(g.neighbor_mask(v));
      if (size >= 3 && (nv & (1u << s)) &&
          size > std::popcount(best_mask)) {
        best_mask = mask;
        best_end = v;
      }
      std::uint32_t ext = nv & ~mask & above;
      while (ext) {
        const vertex w = std::countr_zero(ext);
        ext &= ext - 1;
        reach[mask | (1u << w)] |= 1u << w;
      }
    }
  }

  // Walk back from best_end to min(best_mask).
  std::vector<vertex> order;
  std::uint32_t mask = best_mask;
  vertex v = best_end;
  const vertex s = std::countr_zero(best_mask);
  while (true) {
    order.push_back(v);
    if (v == s) break;
    mask &= ~(1u << v);
    std::uint32_t prev =
        reach[mask] & static_cast<std::uint32_t>(g.neighbor_mask(v));
    v = std::countr_zero(prev);
  }
  std::reverse(order.begin(), order.end());
  if (order[1] > order.back()) std::reverse(order.begin() + 1, order.end());
  r.cycle = oriented_cycle(std::move(order));
  return r;
}

enum class cut_verdict { non_hamiltonian, inconclusive };

struct cut_witness {
  vertex_set cut;
  int component_count = 0;
  cut_verdict verdict = cut_verdict::inconclusive;
};

// c(G - S) > |S| certifies that G has no Hamiltonian cycle. For S empty the
// certificate is c(G) >= 2; a connected graph proves nothing.
inline cut_witness cut_witness_check(const graph& g, const vertex_set& s) {
  std::vector<bool> removed(g.order(), false);
  for (vertex v : s) {
    check_vertex(g, v);
    removed[v] = true;
  }
  cut_witness w;
  w.cut = s;
  w.component_count = static_cast<int>(components(g, removed).size());
  const int need = std::max<int>(static_cast<int>(s.size()), 1);
  w.verdict = w.component_count > need ? cut_verdict::non_hamiltonian
                                       : cut_verdict::inconclusive;
  return w;
}

}  // namespace hamkit
