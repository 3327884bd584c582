#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hybisect/rational.hpp"
#include "hybisect/util.hpp"

namespace hybisect {

// r-uniform multi-hypergraph on vertices 0..n-1. Edges are kept sorted (within
// an edge and lexicographically across the list) and deduplicated into
// (edge, multiplicity) pairs, so structural equality is operator==.
struct Hypergraph {
  int n = 0;
  int r = 2;
  std::vector<std::vector<int>> edges;
  std::vector<long long> mult;

  long long edge_count() const {
    long long e = 0;
    for (long long m : mult) e += m;
    return e;
  }
  std::size_t distinct_edge_count() const { return edges.size(); }
  bool simple() const {
    return std::all_of(mult.begin(), mult.end(), [](long long m) { return m == 1; });
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

// Edges of size between 2 and max_r; otherwise the same conventions.
struct MixedHypergraph {
  int n = 0;
  int max_r = 2;
  std::vector<std::vector<int>> edges;
  std::vector<long long> mult;

  long long edge_count() const {
    long long e = 0;
    for (long long m : mult) e += m;
    return e;
  }

  friend bool operator==(const MixedHypergraph&, const MixedHypergraph&) = default;
};

namespace detail {

// Sort-and-merge into (edge, multiplicity) pairs. Vertex sanity is left to
// validate() so malformed input can be reported with a precise message.
inline void normalize_edges(std::vector<std::vector<int>>& edges, std::vector<long long>& mult) {
  if (mult.empty()) mult.assign(edges.size(), 1);
  if (mult.size() != edges.size())
    throw std::invalid_argument("multiplicity list length does not match edge list");
  for (auto& e : edges) std::sort(e.begin(), e.end());
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  std::vector<std::vector<int>> se;
  std::vector<long long> sm;
  for (std::size_t idx : order) {
    if (!se.empty() && se.back() == edges[idx]) {
      sm.back() += mult[idx];
    } else {
      se.push_back(edges[idx]);
      sm.push_back(mult[idx]);
    }
  }
  edges = std::move(se);
  mult = std::move(sm);
}

}  // namespace detail

inline void validate(const Hypergraph& h) {
  if (h.n < 0) throw std::invalid_argument("negative vertex count");
  if (h.r < 2) throw std::invalid_argument("uniformity must be at least 2");
  if (h.mult.size() != h.edges.size())
    throw std::invalid_argument("multiplicity list length does not match edge list");
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& e = h.edges[i];
    if (static_cast<int>(e.size()) != h.r)
      throw std::invalid_argument("wrong edge size: edge " + std::to_string(i) + " has " +
                                  std::to_string(e.size()) + " vertices, expected " +
                                  std::to_string(h.r));
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] < 0 || e[j] >= h.n)
        throw std::invalid_argument("vertex out of range in edge " + std::to_string(i));
      if (j > 0 && e[j] == e[j - 1])
        throw std::invalid_argument("repeated vertex in edge " + std::to_string(i));
      if (j > 0 && e[j] < e[j - 1])
        throw std::invalid_argument("edge " + std::to_string(i) + " is not sorted");
    }
    if (i > 0 && !(h.edges[i - 1] < e))
      throw std::invalid_argument("edge list is not sorted/deduplicated at index " +
                                  std::to_string(i));
    if (h.mult[i] < 1) throw std::invalid_argument("non-positive multiplicity at edge " +
                                                   std::to_string(i));
  }
}

inline void validate(const MixedHypergraph& h) {
  if (h.n < 0) throw std::invalid_argument("negative vertex count");
  if (h.max_r < 2) throw std::invalid_argument("max edge size must be at least 2");
  if (h.mult.size() != h.edges.size())
    throw std::invalid_argument("multiplicity list length does not match edge list");
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& e = h.edges[i];
    if (static_cast<int>(e.size()) < 2 || static_cast<int>(e.size()) > h.max_r)
      throw std::invalid_argument("wrong edge size: edge " + std::to_string(i));
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] < 0 || e[j] >= h.n)
        throw std::invalid_argument("vertex out of range in edge " + std::to_string(i));
      if (j > 0 && e[j] == e[j - 1])
        throw std::invalid_argument("repeated vertex in edge " + std::to_string(i));
    }
    if (i > 0 && !(h.edges[i - 1] < e))
      throw std::invalid_argument("edge list is not sorted/deduplicated at index " +
                                  std::to_string(i));
    if (h.mult[i] < 1) throw std::invalid_argument("non-positive multiplicity at edge " +
                                                   std::to_string(i));
  }
}

inline Hypergraph make_hypergraph(int n, int r, std::vector<std::vector<int>> edges,
                                  std::vector<long long> mult = {}) {
  Hypergraph h;
  h.n = n;
  h.r = r;
  detail::normalize_edges(edges, mult);
  h.edges = std::move(edges);
  h.mult = std::move(mult);
  validate(h);
  return h;
}

inline MixedHypergraph make_mixed_hypergraph(int n, int max_r,
                                             std::vector<std::vector<int>> edges,
                                             std::vector<long long> mult = {}) {
  MixedHypergraph h;
  h.n = n;
  h.max_r = max_r;
  detail::normalize_edges(edges, mult);
  h.edges = std::move(edges);
  h.mult = std::move(mult);
  validate(h);
  return h;
}

template <typename H>
std::vector<long long> degrees(const H& h) {
  std::vector<long long> deg(h.n, 0);
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    for (int v : h.edges[i]) deg[v] += h.mult[i];
  return deg;
}

template <typename H>
long long max_degree(const H& h) {
  long long best = 0;
  for (long long d : degrees(h)) best = std::max(best, d);
  return best;
}

// Average degree r·e(H)/n, exact.
inline Rat average_degree(const Hypergraph& h) {
  if (h.n == 0) return Rat(0);
  return Rat(BigInt(h.r) * BigInt(h.edge_count()), BigInt(h.n));
}

// Edge density p = e(H)/C(n,r), exact.
inline Rat density(const Hypergraph& h) {
  BigInt total = binom_big(h.n, h.r);
  if (total == 0) return Rat(0);
  return Rat(BigInt(h.edge_count()), total);
}

// Vertex -> indices of incident distinct edges.
template <typename H>
std::vector<std::vector<int>> incidence_lists(const H& h) {
  std::vector<std::vector<int>> inc(h.n);
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    for (int v : h.edges[i]) inc[v].push_back(static_cast<int>(i));
  return inc;
}

// t-uniform shadow: the multiplicity of a t-set f is the number of edges
// (with multiplicity) containing f. shadow(h, r) == h.
inline Hypergraph shadow(const Hypergraph& h, int t) {
  if (t < 2 || t > h.r) throw std::invalid_argument("shadow order out of range");
  std::map<std::vector<int>, long long> acc;
  std::vector<int> sub(t);
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& e = h.edges[i];
    auto c = first_combination(t);
    do {
      for (int j = 0; j < t; ++j) sub[j] = e[c[j]];
      acc[sub] += h.mult[i];
    } while (next_combination(c, h.r));
  }
  Hypergraph s;
  s.n = h.n;
  s.r = t;
  for (auto& [f, m] : acc) {
    s.edges.push_back(f);
    s.mult.push_back(m);
  }
  validate(s);
  return s;
}

// Complement of a simple hypergraph (multiplicities > 1 have no complement).
inline Hypergraph complement(const Hypergraph& h) {
  if (!h.simple()) throw std::invalid_argument("complement is defined for simple hypergraphs only");
  BigInt total = binom_big(h.n, h.r);
  if (total > BigInt(2000000)) throw guard_error("complement too large to materialize");
  Hypergraph c;
  c.n = h.n;
  c.r = h.r;
  auto comb = first_combination(h.r);
  if (h.n >= h.r) {
    std::size_t at = 0;
    do {
      if (at < h.edges.size() && h.edges[at] == comb) {
        ++at;
        continue;
      }
      c.edges.push_back(comb);
      c.mult.push_back(1);
    } while (next_combination(comb, h.n));
  }
  return c;
}

// Number of edges (with multiplicity) fully inside U.
template <typename H>
long long induced_edge_count(const H& h, const std::vector<int>& subset) {
  std::vector<char> in(h.n, 0);
  for (int v : subset) in[v] = 1;
  long long count = 0;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    bool inside = true;
    for (int v : h.edges[i])
      if (!in[v]) {
        inside = false;
        break;
      }
    if (inside) count += h.mult[i];
  }
  return count;
}

}  // namespace hybisect
