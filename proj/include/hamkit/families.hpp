#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamkit/error.hpp"
#include "hamkit/graph.hpp"
#include "hamkit/invariants.hpp"
#include "hamkit/oracle.hpp"
#include "hamkit/rational.hpp"

namespace hamkit {

// Sequential join expression. Leaves are K_l (complete) or ~K_l (edgeless);
// a chain H_1+...+H_l joins every vertex of H_i to every vertex of H_{i+1}.
struct join_expr {
  enum class kind { complete, empty, chain };

  kind type = kind::complete;
  int order = 0;                    // atoms only
  std::vector<join_expr> children;  // chains only, at least two

  static join_expr complete(int l) { return {kind::complete, l, {}}; }
  static join_expr empty(int l) { return {kind::empty, l, {}}; }
  static join_expr chain(std::vector<join_expr> parts) {
    return {kind::chain, 0, std::move(parts)};
  }

  bool is_atom() const { return type != kind::chain; }

  friend bool operator==(const join_expr&, const join_expr&) = default;
};

namespace detail {

class join_parser {
 public:
  explicit join_parser(std::string_view text) : text_(text) {}

  join_expr parse() {
    join_expr e = expr();
    skip_ws();
    if (at_ < text_.size())
      throw syntax_error("unexpected '" + std::string(1, text_[at_]) + "'",
                         at_);
    return e;
  }

 private:
  void skip_ws() {
    while (at_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[at_])))
      ++at_;
  }

  bool eat(char c) {
    skip_ws();
    if (at_ < text_.size() && text_[at_] == c) {
      ++at_;
      return true;
    }
    return false;
  }

  join_expr expr() {
    std::vector<join_expr> parts;
    parts.push_back(term());
    while (eat('+')) parts.push_back(term());
    if (parts.size() == 1) return std::move(parts.front());
    return join_expr::chain(std::move(parts));
  }

  join_expr term() {
    skip_ws();
    if (eat('(')) {
      join_expr inner = expr();
      if (!eat(')')) throw syntax_error("expected ')'", at_);
      return inner;
    }
    const std::size_t start = at_;
    const bool complement = eat('~');
    if (!eat('K'))
      throw syntax_error(at_ < text_.size() ? "expected 'K', '~K' or '('"
                                            : "unexpected end of input",
                         at_);
    skip_ws();
    const std::size_t digits = at_;
    long long value = 0;
    while (at_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[at_]))) {
      value = value * 10 + (text_[at_] - '0');
      if (value > 1'000'000) throw syntax_error("atom order too large", digits);
      ++at_;
    }
    if (at_ == digits) throw syntax_error("expected atom order", at_);
    if (value == 0) throw zero_order_atom("atom of order zero", start);
    const int l = static_cast<int>(value);
    return complement ? join_expr::empty(l) : join_expr::complete(l);
  }

  std::string_view text_;
  std::size_t at_ = 0;
};

}  // namespace detail

// expr := term ('+' term)* ; term := atom | '(' expr ')' ;
// atom := 'K' INT | '~K' INT ; whitespace is ignored.
inline join_expr parse_join(std::string_view text) {
  return detail::join_parser(text).parse();
}

inline std::string render(const join_expr& e) {
  switch (e.type) {
    case join_expr::kind::complete: return "K" + std::to_string(e.order);
    case join_expr::kind::empty: return "~K" + std::to_string(e.order);
    case join_expr::kind::chain: break;
  }
  std::string out;
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    if (i) out += '+';
    const auto& c = e.children[i];
    out += c.is_atom() ? render(c) : "(" + render(c) + ")";
  }
  return out;
}

inline int expr_order(const join_expr& e) {
  if (e.is_atom()) return e.order;
  int total = 0;
  for (const auto& c : e.children) total += expr_order(c);
  return total;
}

// A built graph plus the vertex range of every atom, left to right.
struct family_graph {
  graph g;
  join_expr expr;
  std::vector<vertex_set> parts;
};

namespace detail {

inline void build_into(const join_expr& e, vertex offset, std::vector<edge>& es,
                       std::vector<vertex_set>& parts) {
  if (e.is_atom()) {
    std::vector<vertex> vs;
    for (int i = 0; i < e.order; ++i) vs.push_back(offset + i);
    if (e.type == join_expr::kind::complete)
      for (int i = 0; i < e.order; ++i)
        for (int j = i + 1; j < e.order; ++j)
          es.emplace_back(offset + i, offset + j);
    parts.emplace_back(std::move(vs));
    return;
  }
  vertex at = offset;
  vertex prev_begin = -1, prev_end = -1;
  for (const auto& c : e.children) {
    const int size = expr_order(c);
    build_into(c, at, es, parts);
    for (vertex u = prev_begin; u >= 0 && u < prev_end; ++u)
      for (vertex v = at; v < at + size; ++v) es.emplace_back(u, v);
    prev_begin = at;
    prev_end = at + size;
    at += size;
  }
}

}  // namespace detail

// Chain elements occupy consecutive index ranges left to right, recursively
// inside parenthesised sub-chains.
inline family_graph build_family(const join_expr& e) {
  std::vector<edge> es;
  family_graph out;
  detail::build_into(e, 0, es, out.parts);
  out.g = graph::from_edge_list(expr_order(e), es);
  out.expr = e;
  return out;
}

inline graph build(const join_expr& e) { return build_family(e).g; }

struct g1_params {
  int k = 0, kappa = 0, m = 0, n = 0;
};

struct g2_params {
  int kappa = 0, r = 0, k = 0, m = 0;
};

inline void validate(const g1_params& p) {
  if (p.k < 1) throw invalid_params("G1 needs k >= 1");
  if (p.k > p.kappa) throw invalid_params("G1 needs k <= kappa");
  if (p.kappa >= p.m) throw invalid_params("G1 needs kappa < m");
  if (2 * p.m + 1 > p.n) throw invalid_params("G1 needs 2m+1 <= n");
  if (p.n > 3 * p.m - p.kappa) throw invalid_params("G1 needs n <= 3m-kappa");
}

inline void validate(const g2_params& p) {
  if (p.r < 4) throw invalid_params("G2 needs r >= 4");
  if (p.k < 3) throw invalid_params("G2 needs k >= 3");
  if (p.k > p.kappa - 2) throw invalid_params("G2 needs k <= kappa-2");
  if (p.m != (p.k + 1) * (p.r - 2) + 4)
    throw invalid_params("G2 needs m = (k+1)(r-2)+4");
}

// K_{n-2m} + ~K_kappa + ~K_m + ~K_{m-kappa}; parts[1] and parts[3] form the
// separating set of size m.
inline family_graph generate_g1(const g1_params& p) {
  validate(p);
  return build_family(join_expr::chain(
      {join_expr::complete(p.n - 2 * p.m), join_expr::empty(p.kappa),
       join_expr::empty(p.m), join_expr::empty(p.m - p.kappa)}));
}

inline vertex_set g1_cut(const family_graph& f) {
  std::vector<vertex> s(f.parts[1].begin(), f.parts[1].end());
  s.insert(s.end(), f.parts[3].begin(), f.parts[3].end());
  return vertex_set(std::move(s));
}

// K_1 + ~K_kappa + K_{kappa+m-r} + (~K_m + K_r).
inline family_graph generate_g2(const g2_params& p) {
  validate(p);
  return build_family(join_expr::chain(
      {join_expr::complete(1), join_expr::empty(p.kappa),
       join_expr::complete(p.kappa + p.m - p.r),
       join_expr::chain({join_expr::empty(p.m), join_expr::complete(p.r)})}));
}

// Every legal G1 parameter set with n <= max_n.
inline std::vector<g1_params> enumerate_g1(int max_n) {
  std::vector<g1_params> out;
  for (int m = 2; 2 * m + 1 <= max_n; ++m)
    for (int kappa = 1; kappa < m; ++kappa)
      for (int k = 1; k <= kappa; ++k)
        for (int n = 2 * m + 1; n <= std::min(max_n, 3 * m - kappa); ++n)
          out.push_back({k, kappa, m, n});
  return out;
}

struct epsilon_certificate {
  g1_params params;
  rational epsilon;
  long long sigma = 0;   // sigma_{k+1}(G1)
  long long closed_form = 0;  // n + kappa + (k-2)m - 1
  int alpha = 0;
  int kappa = 0;
  bool invariants_computed = false;  // false: closed forms used (n > 64)
  rational bound;  // n + (1+eps)kappa + (k-2-eps)(alpha-1)
  bool holds = false;
  cut_witness cut;
};

struct epsilon_instance {
  family_graph family;
  epsilon_certificate certificate;
};

// Smallest G1 with eps(m - kappa) >= 1: scan m upward from k+1 with
// kappa = max(k, m - ceil(1/eps)), n = 2m+1.
inline epsilon_instance generate_g1_epsilon(int k, const rational& eps) {
  if (k < 1) throw invalid_params("k must be at least 1");
  if (eps <= 0) throw invalid_params("epsilon must be positive");
  const rational inv = 1 / eps;
  const long long gap = (inv.numerator() + inv.denominator() - 1) /
                        inv.denominator();
  g1_params p;
  for (long long m = k + 1;; ++m) {
    if (m > 500'000) throw invalid_params("epsilon too small");
    const long long kappa = std::max<long long>(k, m - gap);
    if (kappa < m && eps * rational(m - kappa) >= 1) {
      p = {k, static_cast<int>(kappa), static_cast<int>(m),
           static_cast<int>(2 * m + 1)};
      break;
    }
  }
  epsilon_instance out{generate_g1(p), {}};
  auto& c = out.certificate;
  c.params = p;
  c.epsilon = eps;
  c.closed_form =
      static_cast<long long>(p.n) + p.kappa + (p.k - 2LL) * p.m - 1;
  if (out.family.g.order() <= max_mask_vertices) {
    c.alpha = independence_number(out.family.g);
    c.kappa = connectivity(out.family.g);
    c.sigma = sigma(out.family.g, k + 1).value();
    c.invariants_computed = true;
  } else {
    c.alpha = p.m + 1;
    c.kappa = p.kappa;
    c.sigma = c.closed_form;
  }
  c.bound = rational(p.n) + (1 + eps) * rational(c.kappa) +
            (rational(k - 2) - eps) * rational(c.alpha - 1);
  c.holds = rational(c.sigma) >= c.bound;
  c.cut = cut_witness_check(out.family.g, g1_cut(out.family));
  return out;
}

namespace classic {

inline graph complete(int n) {
  if (n < 1) throw invalid_params("complete graph needs n >= 1");
  return build(join_expr::complete(n));
}

inline graph empty(int n) {
  if (n < 1) throw invalid_params("empty graph needs n >= 1");
  return build(join_expr::empty(n));
}

inline graph cycle(int n) {
  if (n < 3) throw invalid_params("cycle needs n >= 3");
  std::vector<edge> es;
  for (vertex i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return graph::from_edge_list(n, es);
}

inline graph path(int n) {
  if (n < 1) throw invalid_params("path needs n >= 1");
  std::vector<edge> es;
  for (vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return graph::from_edge_list(n, es);
}

inline graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw invalid_params("complete bipartite needs a,b >= 1");
  return build(join_expr::chain({join_expr::empty(a), join_expr::empty(b)}));
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline graph petersen() {
  std::vector<edge> es;
  for (vertex i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
    es.emplace_back(i, i + 5);
  }
  return graph::from_edge_list(10, es);
}

// Dispatch by name for the command line.
inline graph by_name(std::string_view name, const std::vector<int>& sizes) {
  auto need = [&](std::size_t count) {
    if (sizes.size() != count)
      throw invalid_params(std::string(name) + " takes " +
                           std::to_string(count) + " size(s)");
  };
  if (name == "complete") return need(1), complete(sizes[0]);
  if (name == "cycle") return need(1), cycle(sizes[0]);
  if (name == "path") return need(1), path(sizes[0]);
  if (name == "empty") return need(1), empty(sizes[0]);
  if (name == "complete_bipartite")
    return need(2), complete_bipartite(sizes[0], sizes[1]);
  if (name == "petersen") return need(0), petersen();
  throw invalid_params("unknown classic graph '" + std::string(name) + "'");
}

}  // namespace classic

}  // namespace hamkit
