#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hybisect/hypergraph.hpp"
#include "hybisect/rational.hpp"

namespace hybisect {

// Sparse unit-vector embedding over the coordinate set V. For each vertex v,
//   x_v(v) = 1,  x_v(u) = alpha / sqrt(2 r Delta)  when u != v shares an edge
//   with v,  0 otherwise;  y_v = x_v / ||x_v||.
// Co-edge pairs end up with a slightly positive inner product of at least
// alpha / sqrt(2 r Delta), while every pair stays below alpha (for Delta large
// enough). The edge list is carried along so rounding can score cuts without
// going back to the source hypergraph.
struct Embedding {
  int n = 0;
  int r = 2;           // scale uses the maximum edge size
  long long max_deg = 0;
  double alpha = 0.05;
  double scale = 0.0;  // alpha / sqrt(2 r Delta)
  std::vector<std::vector<int>> nbr;  // sorted co-edge neighbors, excluding v itself
  std::vector<double> xnorm;          // ||x_v||_2
  bool alpha_bound_certified = false; // sufficient condition for <y_u,y_v> < alpha

  std::vector<std::vector<int>> edges;
  std::vector<long long> mult;
  long long total_edges = 0;

  // <x_u, x_v>; exploits the two-level structure (1 on the diagonal
  // coordinate, `scale` on neighbors).
  double inner_x(int u, int v) const {
    if (u == v) return xnorm[u] * xnorm[u];
    bool adjacent = std::binary_search(nbr[u].begin(), nbr[u].end(), v);
    long long common = 0;
    const auto& a = nbr[u];
    const auto& b = nbr[v];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) {
        if (a[i] != u && a[i] != v) ++common;
        ++i;
        ++j;
      } else if (a[i] < b[j]) {
        ++i;
      } else {
        ++j;
      }
    }
    return (adjacent ? 2.0 * scale : 0.0) + static_cast<double>(common) * scale * scale;
  }

  double inner_y(int u, int v) const { return inner_x(u, v) / (xnorm[u] * xnorm[v]); }

  bool adjacent(int u, int v) const {
    return std::binary_search(nbr[u].begin(), nbr[u].end(), v);
  }
};

namespace detail {

inline Embedding build_embedding_impl(int n, int r_scale,
                                      const std::vector<std::vector<int>>& edges,
                                      const std::vector<long long>& mult, double alpha) {
  if (alpha <= 0.0 || alpha > 0.1) throw std::invalid_argument("alpha out of range (0, 0.1]");
  std::vector<long long> deg(n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (int v : edges[i]) deg[v] += mult[i];
  long long max_deg = 0;
  for (long long d : deg) max_deg = std::max(max_deg, d);
  if (max_deg == 0) throw std::invalid_argument("empty hypergraph");

  Embedding e;
  e.n = n;
  e.r = r_scale;
  e.max_deg = max_deg;
  e.alpha = alpha;
  e.scale = alpha / std::sqrt(2.0 * r_scale * static_cast<double>(max_deg));
  e.edges = edges;
  e.mult = mult;
  for (long long m : mult) e.total_edges += m;

  e.nbr.assign(n, {});
  for (const auto& edge : edges)
    for (int u : edge)
      for (int v : edge)
        if (u != v) e.nbr[u].push_back(v);
  for (auto& list : e.nbr) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  e.xnorm.resize(n);
  for (int v = 0; v < n; ++v)
    e.xnorm[v] = std::sqrt(1.0 + static_cast<double>(e.nbr[v].size()) * e.scale * e.scale);

  // <x_u, x_v> <= 2 s + (r-1) Delta s^2; if that stays below alpha the strict
  // upper bound on <y_u, y_v> holds regardless of the instance.
  double worst = 2.0 * e.scale +
                 static_cast<double>(r_scale - 1) * static_cast<double>(max_deg) * e.scale * e.scale;
  e.alpha_bound_certified = worst < alpha;
  return e;
}

}  // namespace detail

inline Embedding build_embedding(const Hypergraph& h, double alpha = 0.05) {
  return detail::build_embedding_impl(h.n, h.r, h.edges, h.mult, alpha);
}

inline Embedding build_embedding(const MixedHypergraph& h, double alpha = 0.05) {
  return detail::build_embedding_impl(h.n, h.max_r, h.edges, h.mult, alpha);
}

// Batch interface over normalized vectors.
inline std::vector<double> pairwise_products(const Embedding& e,
                                             const std::vector<std::pair<int, int>>& pairs) {
  std::vector<double> out;
  out.reserve(pairs.size());
  for (auto [u, v] : pairs) out.push_back(e.inner_y(u, v));
  return out;
}

namespace detail {

// Per-entry values of y_v lifted into exact rationals (a double is an exact
// rational), so the two pair-sum routes below are algebraically identical
// expressions over identical inputs and must agree bit for bit.
inline void lifted_entries(const Embedding& e, int v, Rat& self, Rat& per_nbr) {
  self = Rat(1.0 / e.xnorm[v]);
  per_nbr = Rat(e.scale / e.xnorm[v]);
}

}  // namespace detail

// Sum over unordered pairs {v, v'} of <y_v, y_v'>, via per-coordinate
// aggregation: (sum_u colsum(u)^2 - sum_v ||y_v||^2) / 2 over lifted values.
inline Rat pair_sum_aggregated(const Embedding& e) {
  std::vector<Rat> colsum(e.n, Rat(0));
  Rat sumsq(0);
  for (int v = 0; v < e.n; ++v) {
    Rat self, per;
    detail::lifted_entries(e, v, self, per);
    colsum[v] += self;
    sumsq += self * self;
    for (int u : e.nbr[v]) {
      colsum[u] += per;
      sumsq += per * per;
    }
  }
  Rat total(0);
  for (const Rat& c : colsum) total += c * c;
  return (total - sumsq) / 2;
}

// Same quantity by the naive double loop over pairs with sparse support
// merging; used as the oracle for the aggregated route.
inline Rat pair_sum_naive(const Embedding& e) {
  std::vector<Rat> self(e.n), per(e.n);
  for (int v = 0; v < e.n; ++v) detail::lifted_entries(e, v, self[v], per[v]);
  Rat total(0);
  for (int u = 0; u < e.n; ++u) {
    for (int v = u + 1; v < e.n; ++v) {
      Rat dot(0);
      // coordinate u: y_u(u) * y_v(u); y_v(u) nonzero iff adjacent
      bool adj = e.adjacent(u, v);
      if (adj) {
        dot += self[u] * per[v];
        dot += per[u] * self[v];
      }
      const auto& a = e.nbr[u];
      const auto& b = e.nbr[v];
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
          if (a[i] != u && a[i] != v) dot += per[u] * per[v];
          ++i;
          ++j;
        } else if (a[i] < b[j]) {
          ++i;
        } else {
          ++j;
        }
      }
      total += dot;
    }
  }
  return total;
}

struct ScalarSumReport {
  Rat pair_sum;                    // exact, over lifted double entries
  double bound = 0.0;              // 4 r Delta alpha^2 n
  bool delta_large_enough = false; // the bound is only claimed in that regime
  bool holds = false;
};

// Computes the pair sum exactly and compares against 4 r Delta alpha^2 n.
// The bound is asserted only when Delta is large enough for the per-coordinate
// argument (r Delta alpha^2 / 2 + alpha sqrt(2 r Delta) <= 4 r Delta alpha^2);
// both sides are always reported.
inline ScalarSumReport scalar_sum_bound_check(const Embedding& e) {
  ScalarSumReport rep;
  rep.pair_sum = pair_sum_aggregated(e);
  rep.bound = 4.0 * e.r * static_cast<double>(e.max_deg) * e.alpha * e.alpha * e.n;
  double per_u_quad = e.r * static_cast<double>(e.max_deg) * e.alpha * e.alpha / 2.0;
  double per_u_lin = e.alpha * std::sqrt(2.0 * e.r * static_cast<double>(e.max_deg));
  rep.delta_large_enough =
      per_u_quad + per_u_lin <= 4.0 * e.r * static_cast<double>(e.max_deg) * e.alpha * e.alpha;
  rep.holds = to_double(rep.pair_sum) <= rep.bound;
  return rep;
}

}  // namespace hybisect
