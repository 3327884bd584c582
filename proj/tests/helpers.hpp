#pragma once

#include <vector>

#include "hybisect/cut.hpp"
#include "hybisect/generators.hpp"
#include "hybisect/hypergraph.hpp"
#include "hybisect/rational.hpp"
#include "hybisect/util.hpp"

namespace testutil {

using namespace hybisect;

inline Hypergraph k4() {
  return make_hypergraph(4, 2, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline Hypergraph fano_plane() {
  return make_hypergraph(7, 3,
                         {{0, 1, 2},
                          {0, 3, 4},
                          {0, 5, 6},
                          {1, 3, 5},
                          {1, 4, 6},
                          {2, 3, 6},
                          {2, 4, 5}});
}

inline Hypergraph perfect_matching(int n) {
  std::vector<std::vector<int>> edges;
  for (int i = 0; i + 1 < n; i += 2) edges.push_back({i, i + 1});
  return make_hypergraph(n, 2, edges);
}

inline Hypergraph complete_uniform(int n, int r) {
  std::vector<std::vector<int>> edges;
  auto c = first_combination(r);
  do {
    edges.push_back(c);
  } while (next_combination(c, n));
  return make_hypergraph(n, r, edges);
}

// Independent slow count of edges inside U (no membership tricks).
inline long long naive_induced_count(const Hypergraph& h, const std::vector<int>& u) {
  long long total = 0;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    bool ok = true;
    for (int v : h.edges[i]) {
      bool found = false;
      for (int w : u)
        if (w == v) found = true;
      if (!found) {
        ok = false;
        break;
      }
    }
    if (ok) total += h.mult[i];
  }
  return total;
}

inline Rat naive_disc(const Hypergraph& h, const std::vector<int>& u) {
  return Rat(naive_induced_count(h, u)) -
         density(h) * Rat(binom_big(static_cast<long long>(u.size()), h.r));
}

// Exact average bisection size over all equipartitions, by full enumeration.
// Independent of the closed-form expectation.
inline Rat enumerate_equipartition_average(const Hypergraph& h) {
  int n = h.n;
  int f = n / 2;
  BigInt total_cross = 0;
  BigInt count = 0;
  std::vector<char> in(n, 0);
  auto c = first_combination(f);
  if (f == 0) return Rat(0);
  do {
    std::fill(in.begin(), in.end(), 0);
    for (int v : c) in[v] = 1;
    long long cross = 0;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      int cnt = 0;
      for (int v : h.edges[i])
        if (in[v]) ++cnt;
      if (cnt > 0 && cnt < static_cast<int>(h.edges[i].size())) cross += h.mult[i];
    }
    total_cross += cross;
    count += 1;
  } while (next_combination(c, n));
  return Rat(total_cross, count);
}

// Mixed-size batch of small random instances for property tests.
inline std::vector<Hypergraph> random_instances(int how_many, int n_lo, int n_hi,
                                                std::uint64_t seed) {
  std::vector<Hypergraph> out;
  Rng rng(seed);
  for (int i = 0; i < how_many; ++i) {
    int n = n_lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_hi - n_lo + 1)));
    int r = 2 + static_cast<int>(rng.below(2));  // r in {2, 3}
    if (r > n) r = n;
    double d_target = 1.5 + 4.0 * rng.uniform01();
    double denom = to_double(Rat(binom_big(n - 1, r - 1)));
    double p = denom > 0 ? std::min(1.0, d_target / denom) : 0.0;
    out.push_back(gen_random_binomial(n, r, p, seed * 1000 + static_cast<std::uint64_t>(i)));
  }
  return out;
}

}  // namespace testutil
