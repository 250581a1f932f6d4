#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamkit/error.hpp"

namespace hamkit {

using vertex = int;
using edge = std::pair<vertex, vertex>;
using vertex_mask = std::uint64_t;

// Exponential kernels (independence, sigma, Hamiltonicity) work on 64-bit
// vertex masks.
inline constexpr int max_mask_vertices = 64;

inline vertex_mask bit(vertex v) { return vertex_mask{1} << v; }

inline int popcount(vertex_mask m) { return std::popcount(m); }

inline vertex lowest(vertex_mask m) { return std::countr_zero(m); }

template <typename F>
void for_each_bit(vertex_mask m, F&& f) {
  while (m) {
    f(lowest(m));
    m &= m - 1;
  }
}

// Sorted set of distinct vertex indices.
class vertex_set {
 public:
  vertex_set() = default;
  vertex_set(std::initializer_list<vertex> vs) : members_(vs) { normalize(); }
  explicit vertex_set(std::vector<vertex> vs) : members_(std::move(vs)) {
    normalize();
  }

  static vertex_set from_mask(vertex_mask m) {
    vertex_set s;
    for_each_bit(m, [&](vertex v) { s.members_.push_back(v); });
    return s;
  }

  bool contains(vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  void insert(vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
  }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<vertex>& members() const { return members_; }

  vertex_mask mask() const {
    vertex_mask m = 0;
    for (vertex v : members_) m |= bit(v);
    return m;
  }

  friend bool operator==(const vertex_set&, const vertex_set&) = default;

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
  }
  std::vector<vertex> members_;
};

// Immutable simple undirected graph on vertices 0..n-1.
class graph {
 public:
  graph() = default;

  explicit graph(int n) : n_(n), adj_(n), words_((n + 63) / 64) {
    if (n < 0) throw index_out_of_range("negative vertex count");
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  }

  // Duplicate edges collapse; self loops and out-of-range indices throw.
  static graph from_edge_list(int n, std::span<const edge> edges) {
    graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw index_out_of_range("edge (" + std::to_string(u) + "," +
                                 std::to_string(v) + ") outside [0," +
                                 std::to_string(n) + ")");
      if (u == v)
        throw self_loop("self loop at vertex " + std::to_string(u));
      g.set_bit(u, v);
      g.set_bit(v, u);
    }
    for (vertex u = 0; u < n; ++u)
      for (vertex v = 0; v < n; ++v)
        if (g.adjacent(u, v)) g.adj_[u].push_back(v);
    return g;
  }

  static graph from_edge_list(int n, std::initializer_list<edge> edges) {
    return from_edge_list(n, std::span<const edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }

  std::size_t size() const {
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return twice / 2;
  }

  bool adjacent(vertex u, vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) & 1u;
  }

  std::span<const vertex> neighbors(vertex v) const { return adj_[v]; }

  int degree(vertex v) const { return static_cast<int>(adj_[v].size()); }

  int min_degree() const {
    int d = n_ == 0 ? 0 : n_;
    for (vertex v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  // Only valid for n <= 64.
  vertex_mask neighbor_mask(vertex v) const {
    return bits_[static_cast<std::size_t>(v) * words_];
  }

  vertex_mask all_mask() const {
    return n_ == 64 ? ~vertex_mask{0} : (vertex_mask{1} << n_) - 1;
  }

  std::vector<edge> edges() const {
    std::vector<edge> out;
    for (vertex u = 0; u < n_; ++u)
      for (vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool is_complete() const {
    for (vertex v = 0; v < n_; ++v)
      if (degree(v) != n_ - 1) return false;
    return true;
  }

  friend bool operator==(const graph& a, const graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void set_bit(vertex u, vertex v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |=
        std::uint64_t{1} << (v & 63);
  }

  int n_ = 0;
  std::vector<std::vector<vertex>> adj_;
  std::vector<std::uint64_t> bits_;
  std::size_t words_ = 0;
};

inline void require_mask_size(const graph& g, const char* what) {
  if (g.order() > max_mask_vertices)
    throw budget_exceeded(std::string(what) + ": graph has " +
                          std::to_string(g.order()) +
                          " vertices, exact search supports at most 64");
}

inline void check_vertex(const graph& g, vertex v) {
  if (v < 0 || v >= g.order())
    throw index_out_of_range("vertex " + std::to_string(v) +
                             " outside [0," + std::to_string(g.order()) + ")");
}

struct induced {
  graph g;
  std::vector<vertex> old_to_new;  // -1 for dropped vertices
  std::vector<vertex> new_to_old;
};

inline induced induced_subgraph(const graph& g, const vertex_set& s) {
  induced out;
  out.old_to_new.assign(g.order(), -1);
  for (vertex v : s) {
    check_vertex(g, v);
    out.old_to_new[v] = static_cast<vertex>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<edge> es;
  for (vertex u : s)
    for (vertex v : g.neighbors(u))
      if (u < v && out.old_to_new[v] >= 0)
        es.emplace_back(out.old_to_new[u], out.old_to_new[v]);
  out.g = graph::from_edge_list(static_cast<int>(s.size()), es);
  return out;
}

// Connected components of g minus the `removed` vertices, each block sorted,
// blocks ordered by smallest member.
inline std::vector<std::vector<vertex>> components(
    const graph& g, const std::vector<bool>& removed) {
  std::vector<std::vector<vertex>> blocks;
  std::vector<bool> seen(g.order(), false);
  for (vertex s = 0; s < g.order(); ++s) {
    if (seen[s] || removed[s]) continue;
    std::vector<vertex> block{s};
    seen[s] = true;
    for (std::size_t i = 0; i < block.size(); ++i)
      for (vertex w : g.neighbors(block[i]))
        if (!seen[w] && !removed[w]) {
          seen[w] = true;
          block.push_back(w);
        }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

inline std::vector<std::vector<vertex>> components(const graph& g) {
  return components(g, std::vector<bool>(g.order(), false));
}

inline bool is_connected(const graph& g) { return components(g).size() <= 1; }

inline bool is_independent(const graph& g, const vertex_set& s) {
  for (vertex u : s)
    for (vertex v : s)
      if (u < v && g.adjacent(u, v)) return false;
  return true;
}

}  // namespace hamkit
