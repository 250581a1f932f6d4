#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamkit/error.hpp"
#include "hamkit/graph.hpp"
#include "hamkit/invariants.hpp"

namespace hamkit {

enum class condition_id {
  dirac,
  ore,
  chvatal_erdos,
  bondy,
  bauer_broersma_veldman_li,
  ota,
  li,
  main,
};

inline const char* to_string(condition_id id) {
  switch (id) {
    case condition_id::dirac: return "DIRAC";
    case condition_id::ore: return "ORE";
    case condition_id::chvatal_erdos: return "CHVATAL_ERDOS";
    case condition_id::bondy: return "BONDY";
    case condition_id::bauer_broersma_veldman_li:
      return "BAUER_BROERSMA_VELDMAN_LI";
    case condition_id::ota: return "OTA";
    case condition_id::li: return "LI";
    case condition_id::main: return "MAIN";
  }
  return "?";
}

inline bool takes_k(condition_id id) {
  return id == condition_id::bondy || id == condition_id::li ||
         id == condition_id::main;
}

struct condition {
  condition_id id;
  int k = 0;  // only for BONDY, LI and MAIN

  std::string name() const {
    return takes_k(id) ? std::string(to_string(id)) + "(" + std::to_string(k) +
                             ")"
                       : to_string(id);
  }
};

struct condition_report {
  condition cond;
  bool applicable = false;
  bool holds = false;
  ext_int lhs = 0;
  long long rhs = 0;
  // lhs - rhs; present only for applicable reports with finite lhs.
  std::optional<long long> margin;
  // Minimizing independent set whenever lhs is a finite sigma value.
  std::optional<vertex_set> witness;
  // OTA only: the failing l, or the tightest l when the condition holds.
  std::optional<int> ota_l;
};

// Invariants computed once and shared by every checker.
struct graph_facts {
  explicit graph_facts(const graph& g)
      : n(g.order()),
        kappa(connectivity(g)),
        alpha(independence_number(g)),
        min_degree(g.min_degree()),
        sigmas(g) {}

  int n;
  int kappa;
  int alpha;
  int min_degree;
  sigma_table sigmas;
};

namespace detail {

inline void set_sigma_side(condition_report& r, const graph_facts& f, int k) {
  r.lhs = f.sigmas(k);
  if (const vertex_set* w = f.sigmas.witness(k)) r.witness = *w;
}

inline void finish(condition_report& r, bool holds) {
  r.holds = r.applicable && holds;
  if (r.applicable && !r.lhs.is_infinite()) r.margin = r.lhs.value() - r.rhs;
}

}  // namespace detail

// All comparisons are exact integer arithmetic. Every theorem needs a cycle
// to exist at all, so n >= 3 is part of each structural hypothesis.
inline condition_report check(const graph_facts& f, condition c) {
  if (takes_k(c.id) && c.k < 1)
    throw invalid_k(std::string(to_string(c.id)) + " requires k >= 1");
  condition_report r;
  r.cond = c;
  const bool order_ok = f.n >= 3;
  const long long n = f.n, kappa = f.kappa, alpha = f.alpha, k = c.k;

  switch (c.id) {
    case condition_id::dirac:
      r.applicable = order_ok;
      r.lhs = f.min_degree;
      r.rhs = (n + 1) / 2;
      detail::finish(r, 2 * f.min_degree >= n);
      break;
    case condition_id::ore:
      r.applicable = order_ok;
      detail::set_sigma_side(r, f, 2);
      r.rhs = n;
      detail::finish(r, r.lhs >= n);
      break;
    case condition_id::chvatal_erdos:
      r.applicable = order_ok;
      r.lhs = kappa;
      r.rhs = alpha;
      detail::finish(r, alpha <= kappa);
      break;
    case condition_id::bondy: {
      // sigma > (k+1)(n-1)/2, i.e. 2 sigma > (k+1)(n-1); rhs is the least
      // integer satisfying the strict bound.
      r.applicable = order_ok && kappa >= k;
      detail::set_sigma_side(r, f, c.k + 1);
      const long long twice = (k + 1) * (n - 1);
      r.rhs = twice / 2 + 1;
      detail::finish(r, r.lhs.is_infinite() || 2 * r.lhs.value() > twice);
      break;
    }
    case condition_id::bauer_broersma_veldman_li:
      r.applicable = order_ok && kappa >= 2;
      detail::set_sigma_side(r, f, 3);
      r.rhs = n + kappa;
      detail::finish(r, r.lhs >= r.rhs);
      break;
    case condition_id::ota: {
      // For l >= alpha, sigma_{l+1} is infinite and the bound is vacuous, so
      // the quantifier over l >= kappa stops at alpha - 1.
      r.applicable = order_ok && kappa >= 2;
      std::optional<int> tightest, failing;
      long long tight_margin = 0;
      for (long long l = kappa; l <= alpha - 1; ++l) {
        const long long bound = n + l * (l - 1);
        const long long s = f.sigmas(static_cast<int>(l + 1)).value();
        if (s < bound && !failing) failing = static_cast<int>(l);
        if (!tightest || s - bound < tight_margin) {
          tightest = static_cast<int>(l);
          tight_margin = s - bound;
        }
      }
      r.ota_l = failing ? failing : tightest;
      if (r.ota_l) {
        detail::set_sigma_side(r, f, *r.ota_l + 1);
        r.rhs = n + static_cast<long long>(*r.ota_l) * (*r.ota_l - 1);
      } else {
        r.lhs = ext_int::infinity();
        r.rhs = n + kappa * (kappa - 1);
      }
      detail::finish(r, !failing);
      break;
    }
    case condition_id::li:
      r.applicable = order_ok && kappa >= k;
      detail::set_sigma_side(r, f, c.k + 1);
      r.rhs = n + (k - 1) * (alpha - 1);
      detail::finish(r, r.lhs >= r.rhs);
      break;
    case condition_id::main:
      r.applicable = order_ok && kappa >= k;
      detail::set_sigma_side(r, f, c.k + 1);
      r.rhs = n + kappa + (k - 2) * (alpha - 1);
      detail::finish(r, r.lhs >= r.rhs);
      break;
  }
  return r;
}

inline condition_report check(const graph& g, condition c) {
  return check(graph_facts(g), c);
}

// n + l(l-1) - sigma_{l+1}: how far the Ota bound misses at a given l.
inline long long ota_gap(const graph_facts& f, int l) {
  return f.n + static_cast<long long>(l) * (l - 1) - f.sigmas(l + 1).value();
}

// The parameter-free conditions followed by BONDY, LI and MAIN for each k.
inline std::vector<condition> standard_conditions(const std::vector<int>& ks) {
  std::vector<condition> out{{condition_id::dirac},
                             {condition_id::ore},
                             {condition_id::chvatal_erdos},
                             {condition_id::bauer_broersma_veldman_li},
                             {condition_id::ota}};
  for (int k : ks) {
    out.push_back({condition_id::bondy, k});
    out.push_back({condition_id::li, k});
    out.push_back({condition_id::main, k});
  }
  return out;
}

}  // namespace hamkit
