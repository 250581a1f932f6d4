#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hamkit/error.hpp"
#include "hamkit/graph.hpp"
#include "hamkit/oracle.hpp"

// Cycle insertion machinery. Throughout, C is an oriented cycle of the host
// graph, H0 a component of G - C, and for an attachment u in N_C(H0) its
// successor attachment u' is the next member of N_C(H0) along C.

namespace hamkit {

// A subgraph H of the host: its vertices and the edges that belong to H
// (path or cycle edges, not every host edge inside the vertex set).
struct subgraph_ref {
  vertex_set vertices;
  std::vector<edge> edges;

  static subgraph_ref path(const graph& g, const std::vector<vertex>& seq) {
    subgraph_ref h;
    h.vertices = vertex_set(seq);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) h.add(g, seq[i], seq[i + 1]);
    return h;
  }

  static subgraph_ref cycle(const graph& g, const std::vector<vertex>& seq) {
    subgraph_ref h = path(g, seq);
    if (seq.size() >= 3) h.add(g, seq.back(), seq.front());
    return h;
  }

  static subgraph_ref vertices_only(vertex_set s) {
    subgraph_ref h;
    h.vertices = std::move(s);
    return h;
  }

 private:
  void add(const graph& g, vertex a, vertex b) {
    if (!g.adjacent(a, b))
      throw invalid_params("subgraph edge " + std::to_string(a) + "-" +
                           std::to_string(b) + " is not a host edge");
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
};

// X(H): vertices outside H adjacent to both ends of some edge of H.
inline vertex_set x_set(const graph& g, const subgraph_ref& h) {
  std::vector<vertex> out;
  for (vertex u = 0; u < g.order(); ++u) {
    if (h.vertices.contains(u)) continue;
    for (auto [a, b] : h.edges)
      if (g.adjacent(u, a) && g.adjacent(u, b)) {
        out.push_back(u);
        break;
      }
  }
  return vertex_set(std::move(out));
}

// I(x;H): edges of H whose both ends are neighbours of x.
inline std::vector<edge> i_edges(const graph& g, vertex x,
                                 const subgraph_ref& h) {
  if (h.vertices.contains(x))
    throw vertex_inside_h("vertex " + std::to_string(x) + " lies inside H");
  std::vector<edge> out;
  for (auto [a, b] : h.edges)
    if (g.adjacent(x, a) && g.adjacent(x, b)) out.emplace_back(a, b);
  return out;
}

inline int degree_into(const graph& g, vertex u, const vertex_set& s) {
  int d = 0;
  for (vertex v : s) d += g.adjacent(u, v) ? 1 : 0;
  return d;
}

// Y(H): vertices outside H with at least alpha neighbours in H, where alpha
// is the independence number of the host.
inline vertex_set y_set(const graph& g, const subgraph_ref& h, int alpha) {
  std::vector<vertex> out;
  for (vertex u = 0; u < g.order(); ++u)
    if (!h.vertices.contains(u) && degree_into(g, u, h.vertices) >= alpha)
      out.push_back(u);
  return vertex_set(std::move(out));
}

// N_C(H0) in cycle order, starting from the cycle's first vertex.
inline std::vector<vertex> attachments(const graph& g, const oriented_cycle& c,
                                       const vertex_set& h0) {
  std::vector<vertex> out;
  for (vertex u : c.order())
    for (vertex h : h0)
      if (g.adjacent(u, h)) {
        out.push_back(u);
        break;
      }
  return out;
}

// v in C(u,u') is insertible if v is in X(C[u',u]) or in Y(C(v,u]).
inline bool is_insertible(const graph& g, const oriented_cycle& c, vertex u,
                          vertex u_next, vertex v, int alpha) {
  if (!c.strictly_between(u, v, u_next))
    throw vertex_not_on_arc("vertex " + std::to_string(v) +
                            " is not on the open arc between " +
                            std::to_string(u) + " and " +
                            std::to_string(u_next));
  const auto back_arc = c.arc(u_next, u, true, true);
  for (std::size_t i = 0; i + 1 < back_arc.size(); ++i)
    if (g.adjacent(v, back_arc[i]) && g.adjacent(v, back_arc[i + 1]))
      return true;
  int into_tail = 0;
  for (vertex w : c.arc(v, u, false, true)) into_tail += g.adjacent(v, w);
  return into_tail >= alpha;
}

inline vertex successor_attachment(const std::vector<vertex>& attach,
                                   vertex u) {
  auto it = std::find(attach.begin(), attach.end(), u);
  if (it == attach.end())
    throw invalid_params("vertex " + std::to_string(u) +
                         " is not an attachment of H0");
  ++it;
  return it == attach.end() ? attach.front() : *it;
}

// First non-insertible vertex of C(u,u'). Throws all_insertible when there is
// none, which can only happen if C is not a longest cycle.
inline vertex first_non_insertible(const graph& g, const oriented_cycle& c,
                                   const vertex_set& h0, vertex u, int alpha) {
  const auto attach = attachments(g, c, h0);
  const vertex u_next = successor_attachment(attach, u);
  for (vertex v : c.arc(u, u_next, false, false))
    if (!is_insertible(g, c, u, u_next, v, alpha)) return v;
  throw all_insertible("every vertex between attachment " + std::to_string(u) +
                           " and " + std::to_string(u_next) + " is insertible",
                       u);
}

struct attachment_record {
  vertex u = -1;
  vertex u_next = -1;  // u'
  vertex x = -1;       // first non-insertible vertex of C(u,u')
  std::vector<vertex> segment;  // D = C(u,x), in cycle order
};

struct non_insertible_frame {
  oriented_cycle cycle;
  vertex_set component;  // H0
  std::vector<attachment_record> records;
  vertex_set x;  // {x_1, ..., x_m}
  vertex x0 = -1;
  int alpha = 0;
};

// Frame for a (caller-certified) longest cycle C and component H0. x0 is the
// vertex of H0 with the most neighbours on C, ties to the smallest index.
inline non_insertible_frame build_frame(const graph& g, const oriented_cycle& c,
                                        const vertex_set& h0, int alpha) {
  if (h0.empty()) throw invalid_params("H0 must be non-empty");
  non_insertible_frame f;
  f.cycle = c;
  f.component = h0;
  f.alpha = alpha;
  const auto attach = attachments(g, c, h0);
  std::vector<vertex> xs;
  for (vertex u : attach) {
    attachment_record r;
    r.u = u;
    r.u_next = successor_attachment(attach, u);
    r.x = first_non_insertible(g, c, h0, u, alpha);
    r.segment = c.arc(u, r.x, false, false);
    xs.push_back(r.x);
    f.records.push_back(std::move(r));
  }
  f.x = vertex_set(xs);
  int best = -1;
  for (vertex h : h0) {
    int d = 0;
    for (vertex v : c.order()) d += g.adjacent(h, v);
    if (d > best) {
      best = d;
      f.x0 = h;
    }
  }
  return f;
}

// X together with x0 is independent.
inline bool frame_x_independent(const graph& g, const non_insertible_frame& f,
                                vertex x0) {
  vertex_set s = f.x;
  s.insert(x0);
  return s.size() == f.x.size() + 1 && is_independent(g, s);
}

// d_C(x_i) <= |D_i| + alpha - 1 for one record.
inline bool non_insertible_degree_bound(const graph& g,
                                        const non_insertible_frame& f,
                                        const attachment_record& r) {
  int d = 0;
  for (vertex v : f.cycle.order()) d += g.adjacent(r.x, v);
  return d <= static_cast<int>(r.segment.size()) + f.alpha - 1;
}

// A cycle D and vertex-disjoint oriented paths Q_1..Q_k of G - D.
struct path_system {
  oriented_cycle base;
  std::vector<std::vector<vertex>> paths;
};

namespace detail {

inline void validate(const graph& g, const path_system& sys) {
  if (!is_valid_cycle(g, sys.base.order()))
    throw invalid_params("base of the path system is not a cycle of G");
  std::vector<bool> used(g.order(), false);
  for (vertex v : sys.base.order()) used[v] = true;
  for (const auto& q : sys.paths)
    for (std::size_t i = 0; i < q.size(); ++i) {
      check_vertex(g, q[i]);
      if (used[q[i]])
        throw invalid_params("path vertex " + std::to_string(q[i]) +
                             " repeats or lies on D");
      used[q[i]] = true;
      if (i + 1 < q.size() && !g.adjacent(q[i], q[i + 1]))
        throw invalid_params("path edge " + std::to_string(q[i]) + "-" +
                             std::to_string(q[i + 1]) + " missing");
    }
}

// Index of the first edge of D (edge i joins D[i] and D[i+1]) in both
// I(a;D) and I(b;D), or -1.
inline int shared_insertion_edge(const graph& g, const oriented_cycle& d,
                                 vertex a, vertex b) {
  const int len = static_cast<int>(d.length());
  for (int i = 0; i < len; ++i) {
    const vertex p = d.at(i), q = d.at(i + 1);
    if (g.adjacent(a, p) && g.adjacent(a, q) && g.adjacent(b, p) &&
        g.adjacent(b, q))
      return i;
  }
  return -1;
}

// Splice `seg` between the cycle-consecutive vertices w and w_next.
inline void splice(std::vector<vertex>& cyc, vertex w, vertex w_next,
                   const std::vector<vertex>& seg) {
  const auto len = cyc.size();
  for (std::size_t i = 0; i < len; ++i) {
    const vertex a = cyc[i], b = cyc[(i + 1) % len];
    if (a == w && b == w_next) {
      cyc.insert(cyc.begin() + static_cast<long>(i) + 1, seg.begin(), seg.end());
      return;
    }
    if (a == w_next && b == w) {
      cyc.insert(cyc.begin() + static_cast<long>(i) + 1, seg.rbegin(),
                 seg.rend());
      return;
    }
  }
  throw internal_merge_stuck("insertion edge " + std::to_string(w) + "-" +
                             std::to_string(w_next) + " no longer on the cycle");
}

// Absorb a vertex w outside cycle c: either w sees z and z+ (w goes between
// them), or w sees z1, z2 with z1+ z2+ adjacent, giving
// w C<-[z1, z2+] C[z1+, z2] w. Smallest z (resp. (z1, z2)) in cycle order.
inline std::optional<std::vector<vertex>> absorb(const graph& g,
                                                 const std::vector<vertex>& c,
                                                 vertex w) {
  const int len = static_cast<int>(c.size());
  auto at = [&](int i) { return c[((i % len) + len) % len]; };
  std::vector<int> nb;
  for (int i = 0; i < len; ++i)
    if (g.adjacent(w, c[i])) nb.push_back(i);
  for (int i : nb)
    if (g.adjacent(w, at(i + 1))) {
      std::vector<vertex> out(c.begin(), c.begin() + i + 1);
      out.push_back(w);
      out.insert(out.end(), c.begin() + i + 1, c.end());
      return out;
    }
  for (int i : nb)
    for (int j : nb) {
      if (i == j || !g.adjacent(at(i + 1), at(j + 1))) continue;
      std::vector<vertex> out{w};
      for (int s = i; at(s) != at(j + 1); --s) out.push_back(at(s));
      out.push_back(at(j + 1));
      for (int s = i + 1; at(s) != at(j); ++s) out.push_back(at(s));
      out.push_back(at(j));
      return out;
    }
  return std::nullopt;
}

}  // namespace detail

// Conditions (I) and (II) for merging the paths of `sys` into its base
// cycle D; throws precondition_i_failed / precondition_ii_failed.
//   (I)  every path vertex a is in X(D) or has at least alpha neighbours in
//        the rest of its path after a together with D;
//   (II) vertices of different paths have no insertion edge of D in common.
inline void check_merge_preconditions(const graph& g, const path_system& sys,
                                      int alpha) {
  detail::validate(g, sys);
  const auto& d = sys.base;
  const vertex_set xd = x_set(g, subgraph_ref::cycle(g, d.order()));

  for (const auto& q : sys.paths)
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (xd.contains(q[i])) continue;
      int deg = 0;
      for (vertex v : d.order()) deg += g.adjacent(q[i], v);
      for (std::size_t j = i + 1; j < q.size(); ++j)
        deg += g.adjacent(q[i], q[j]);
      if (deg < alpha)
        throw precondition_i_failed(
            "vertex " + std::to_string(q[i]) +
                " is neither in X(D) nor in Y of its path tail plus D",
            q[i]);
    }

  for (std::size_t a = 0; a < sys.paths.size(); ++a)
    for (std::size_t b = a + 1; b < sys.paths.size(); ++b)
      for (vertex x : sys.paths[a])
        for (vertex y : sys.paths[b]) {
          const int e = detail::shared_insertion_edge(g, d, x, y);
          if (e >= 0)
            throw precondition_ii_failed(
                "vertices " + std::to_string(x) + " and " + std::to_string(y) +
                    " share insertion edge " + std::to_string(d.at(e)) + "-" +
                    std::to_string(d.at(e + 1)),
                x, y, d.at(e), d.at(e + 1));
        }
}

// Merges every path into D, yielding a cycle on exactly V(D) and the path
// vertices. Phase one splices, path by path, each run Q[u,v] with u the first
// remaining X(D)-vertex and v the last X(D)-vertex sharing an insertion edge
// with u (earliest such edge of D). Phase two absorbs what is left, last
// vertex of a path first, through the two reroutes of absorb().
inline oriented_cycle merge_insert(const graph& g, const path_system& sys,
                                   int alpha) {
  check_merge_preconditions(g, sys, alpha);
  const auto& d = sys.base;
  const vertex_set xd = x_set(g, subgraph_ref::cycle(g, d.order()));

  std::vector<vertex> cyc = d.order();
  std::vector<bool> on_cycle(g.order(), false);
  for (vertex v : cyc) on_cycle[v] = true;

  for (const auto& q : sys.paths) {
    std::size_t from = 0;
    while (true) {
      std::size_t first = from;
      while (first < q.size() && !xd.contains(q[first])) ++first;
      if (first == q.size()) break;
      std::size_t last = first;
      int edge_index = -1;
      for (std::size_t j = q.size(); j-- > first;) {
        if (!xd.contains(q[j])) continue;
        edge_index = detail::shared_insertion_edge(g, d, q[first], q[j]);
        if (edge_index >= 0) {
          last = j;
          break;
        }
      }
      if (edge_index < 0)
        throw internal_merge_stuck("X(D) vertex without insertion edge");
      std::vector<vertex> seg(q.begin() + static_cast<long>(first),
                              q.begin() + static_cast<long>(last) + 1);
      detail::splice(cyc, d.at(edge_index), d.at(edge_index + 1), seg);
      for (vertex v : seg) on_cycle[v] = true;
      from = last + 1;
    }
  }

  while (true) {
    vertex w = -1;
    for (const auto& q : sys.paths) {
      for (std::size_t j = q.size(); j-- > 0;)
        if (!on_cycle[q[j]]) {
          w = q[j];
          break;
        }
      if (w >= 0) break;
    }
    if (w < 0) break;
    auto next = detail::absorb(g, cyc, w);
    if (!next)
      throw internal_merge_stuck("no reroute absorbs vertex " +
                                 std::to_string(w));
    cyc = std::move(*next);
    on_cycle[w] = true;
  }

  std::rotate(cyc.begin(), std::find(cyc.begin(), cyc.end(), d.at(0)),
              cyc.end());
  return oriented_cycle(std::move(cyc));
}

// One extension step. Tries, in order: absorbing a single outside vertex
// into C directly, then, for each component H0 and attachment u whose arc
// C(u,u') is entirely insertible, routing D = C[u',u] through H0 and merging
// C(u,u') back in. Returns nullopt when nothing applies.
inline std::optional<oriented_cycle> extend_cycle(const graph& g,
                                                  const oriented_cycle& c,
                                                  int alpha) {
  std::vector<bool> removed(g.order(), false);
  for (vertex v : c.order()) removed[v] = true;

  for (vertex w = 0; w < g.order(); ++w)
    if (!removed[w])
      if (auto next = detail::absorb(g, c.order(), w))
        return oriented_cycle(std::move(*next));

  for (const auto& block : components(g, removed)) {
    const vertex_set h0(block);
    const auto attach = attachments(g, c, h0);
    if (attach.size() < 2) continue;
    for (vertex u : attach) {
      try {
        first_non_insertible(g, c, h0, u, alpha);
        continue;
      } catch (const all_insertible&) {
      }
      const vertex u_next = successor_attachment(attach, u);

      // Shortest u - u' path with interior in H0.
      std::vector<vertex> parent(g.order(), -2);
      std::vector<vertex> queue;
      for (vertex h : h0)
        if (g.adjacent(u, h)) {
          parent[h] = -1;
          queue.push_back(h);
        }
      vertex end = -1;
      for (std::size_t i = 0; i < queue.size() && end < 0; ++i) {
        const vertex x = queue[i];
        if (g.adjacent(x, u_next)) {
          end = x;
          break;
        }
        for (vertex y : g.neighbors(x))
          if (h0.contains(y) && parent[y] == -2) {
            parent[y] = x;
            queue.push_back(y);
          }
      }
      if (end < 0) continue;
      std::vector<vertex> through;
      for (vertex x = end; x >= 0; x = parent[x]) through.push_back(x);
      std::reverse(through.begin(), through.end());

      std::vector<vertex> d_order = c.arc(u_next, u, true, true);
      d_order.insert(d_order.end(), through.begin(), through.end());
      path_system sys{oriented_cycle(std::move(d_order)), {}};
      auto q = c.arc(u, u_next, false, false);
      if (!q.empty()) sys.paths.push_back(std::move(q));
      return merge_insert(g, sys, alpha);
    }
  }
  return std::nullopt;
}

struct crossing_violation {
  int clause = 0;  // 1..4, the forbidden pattern that was found
  vertex u1 = -1, u2 = -1;
  std::vector<vertex> witness;  // clause-specific endpoints, see crossing_scan

  std::string describe() const {
    std::string s = "clause " + std::to_string(clause) + " at attachments " +
                    std::to_string(u1) + "," + std::to_string(u2) + ":";
    for (vertex v : witness) s += " " + std::to_string(v);
    return s;
  }
};

// Hosts above this order are refused by crossing_scan.
inline constexpr int crossing_scan_max_vertices = 14;

// Reports every occurrence of the four forbidden C-path configurations for
// pairs of distinct attachments u1, u2 with first non-insertible vertices
// x1, x2 (a C-path is a chord, a cycle edge, or a path through a component of
// G - C):
//   1. a C-path v1 - v2 with v_i in C(u_i, x_i]            witness v1 v2
//   2. C-paths v1 - w and v2 - w^-, w in C(v1, u2]          witness v1 v2 w
//   3. C-paths v1 - w1, v2 - w2, w1^- - w2^+ with
//      w1 in C(v1, u2), w2 in C[w1, u2)                    witness v1 v2 w1 w2
//   4. C-paths v_i - w_i and w1^- - w2^- with
//      w_i in C(v_i, u_{3-i}]                               witness v1 v2 w1 w2
// The third C-path of patterns 3 and 4 is only taken through components
// other than H0 (or chords) when `avoid_h0` is set.
inline std::vector<crossing_violation> crossing_scan(
    const graph& g, const non_insertible_frame& f, bool avoid_h0 = true) {
  if (g.order() > crossing_scan_max_vertices)
    throw budget_exceeded("crossing_scan is exact only up to " +
                          std::to_string(crossing_scan_max_vertices) +
                          " vertices");
  const auto& c = f.cycle;
  const int n = g.order();
  std::vector<bool> removed(n, false);
  for (vertex v : c.order()) removed[v] = true;

  // linked[a][b]: some C-path joins a and b; outer[a][b]: one avoiding H0.
  std::vector<std::vector<char>> linked(n, std::vector<char>(n, 0));
  auto outer = linked;
  for (vertex a : c.order())
    for (vertex b : c.order())
      if (a != b && g.adjacent(a, b)) linked[a][b] = outer[a][b] = 1;
  for (const auto& block : components(g, removed)) {
    const bool is_h0 = f.component.contains(block.front());
    std::vector<vertex> touch;
    for (vertex a : c.order())
      for (vertex h : block)
        if (g.adjacent(a, h)) {
          touch.push_back(a);
          break;
        }
    for (vertex a : touch)
      for (vertex b : touch)
        if (a != b) {
          linked[a][b] = 1;
          if (!is_h0) outer[a][b] = 1;
        }
  }
  const auto& third = avoid_h0 ? outer : linked;

  std::vector<crossing_violation> out;
  auto report = [&](int clause, const attachment_record& r1,
                    const attachment_record& r2, std::vector<vertex> w) {
    out.push_back({clause, r1.u, r2.u, std::move(w)});
  };

  for (std::size_t i = 0; i < f.records.size(); ++i)
    for (std::size_t j = 0; j < f.records.size(); ++j) {
      if (i == j) continue;
      const auto& r1 = f.records[i];
      const auto& r2 = f.records[j];
      const auto s1 = c.arc(r1.u, r1.x, false, true);
      const auto s2 = c.arc(r2.u, r2.x, false, true);

      if (i < j)
        for (vertex v1 : s1)
          for (vertex v2 : s2)
            if (linked[v1][v2]) report(1, r1, r2, {v1, v2});

      for (vertex v1 : s1)
        for (vertex w : c.arc(v1, r2.u, false, true)) {
          if (!linked[v1][w]) continue;
          for (vertex v2 : s2)
            if (linked[v2][c.pred(w)]) report(2, r1, r2, {v1, v2, w});
        }

      for (vertex v1 : s1)
        for (vertex w1 : c.arc(v1, r2.u, false, false)) {
          if (!linked[v1][w1]) continue;
          for (vertex v2 : s2)
            for (vertex w2 : c.arc(w1, r2.u, true, false))
              if (linked[v2][w2] && third[c.pred(w1)][c.succ(w2)])
                report(3, r1, r2, {v1, v2, w1, w2});
        }

      if (i < j)
        for (vertex v1 : s1)
          for (vertex w1 : c.arc(v1, r2.u, false, true)) {
            if (!linked[v1][w1]) continue;
            for (vertex v2 : s2)
              for (vertex w2 : c.arc(v2, r1.u, false, true))
                if (linked[v2][w2] && third[c.pred(w1)][c.pred(w2)])
                  report(4, r1, r2, {v1, v2, w1, w2});
          }
    }
  return out;
}

inline std::vector<crossing_violation> crossing_scan(const graph& g,
                                                     const oriented_cycle& c,
                                                     const vertex_set& h0,
                                                     int alpha,
                                                     bool avoid_h0 = true) {
  return crossing_scan(g, build_frame(g, c, h0, alpha), avoid_h0);
}

}  // namespace hamkit
