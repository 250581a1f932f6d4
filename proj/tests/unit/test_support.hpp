#pragma once

// Brute-force reference implementations for the unit tests. None of these
// call into the library's algorithms; they only read adjacency.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <vector>

#include "hamkit/graph.hpp"

namespace hamkit::ref {

inline bool independent(const graph& g, std::uint32_t set) {
  for (int u = 0; u < g.order(); ++u)
    if (set >> u & 1)
      for (int v = u + 1; v < g.order(); ++v)
        if ((set >> v & 1) && g.adjacent(u, v)) return false;
  return true;
}

inline int alpha(const graph& g) {
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << g.order()); ++s)
    if (independent(g, s)) best = std::max(best, std::popcount(s));
  return best;
}

// Minimum degree sum over independent k-sets, by enumerating k-subsets.
inline std::optional<long long> sigma(const graph& g, int k) {
  const int n = g.order();
  if (k > n) return std::nullopt;
  std::optional<long long> best;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j)
        if (g.adjacent(idx[i], idx[j])) ok = false;
    if (ok) {
      long long s = 0;
      for (int v : idx) s += g.degree(v);
      if (!best || s < *best) best = s;
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

inline bool connected_without(const graph& g, std::uint32_t removed) {
  int start = -1, alive = 0;
  for (int v = 0; v < g.order(); ++v)
    if (!(removed >> v & 1)) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<bool> seen(g.order(), false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < g.order(); ++v)
      if (!seen[v] && !(removed >> v & 1) && g.adjacent(u, v)) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == alive;
}

// Smallest vertex cut; n-1 for complete graphs.
inline int kappa(const graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  int best = n - 1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int size = std::popcount(s);
    if (size >= best || n - size < 2) continue;
    if (!connected_without(g, s)) best = size;
  }
  return best;
}

// Menger by brute force: smallest set of other vertices separating x from y;
// +1 if xy is an edge (removing the edge, then counting).
inline int local_kappa(const graph& g, int x, int y) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if ((s >> x & 1) || (s >> y & 1)) continue;
    const int size = std::popcount(s);
    if (size >= best) continue;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{x};
    seen[x] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (!seen[v] && !(s >> v & 1) && g.adjacent(u, v) &&
            !(u == x && v == y) && !(u == y && v == x)) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    if (!seen[y]) best = size;
  }
  return best + (g.adjacent(x, y) ? 1 : 0);
}

// Hamiltonicity by permutations of 1..n-1 (n <= 9 or so).
inline bool hamiltonian(const graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<int> p(n - 1);
  std::iota(p.begin(), p.end(), 1);
  do {
    if (!g.adjacent(0, p.front()) || !g.adjacent(p.back(), 0)) continue;
    bool ok = true;
    for (int i = 0; i + 1 < n - 1 && ok; ++i) ok = g.adjacent(p[i], p[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Longest cycle length by DFS over simple paths from each minimum vertex.
inline int longest_cycle(const graph& g) {
  const int n = g.order();
  int best = 0;
  std::vector<bool> used(n, false);
  std::function<void(int, int, int)> dfs = [&](int start, int cur, int len) {
    for (int v = start; v < n; ++v) {
      if (!g.adjacent(cur, v)) continue;
      if (v == start && len >= 3) best = std::max(best, len);
      if (!used[v] && v > start) {
        used[v] = true;
        dfs(start, v, len + 1);
        used[v] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = true;
    dfs(s, s, 1);
    used[s] = false;
  }
  return best;
}

inline int girth(const graph& g) {
  int best = std::numeric_limits<int>::max();
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < g.order(); ++v) {
        if (!g.adjacent(u, v)) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best;
}

// Uniform G(n,p) from std::mt19937_64, independent of the library PRNG.
inline graph random(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return graph::from_edge_list(n, es);
}

inline std::vector<graph> corpus(std::size_t count, int n_min, int n_max,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(n_min, n_max);
  std::uniform_real_distribution<double> prob(0.15, 0.85);
  std::vector<graph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random(order(rng), prob(rng), rng));
  return out;
}

}  // namespace hamkit::ref
