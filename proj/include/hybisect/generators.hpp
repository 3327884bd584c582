#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hybisect/hypergraph.hpp"
#include "hybisect/rng.hpp"

namespace hybisect {

// Includes each of the C(n,r) possible edges independently with probability p.
inline Hypergraph gen_random_binomial(int n, int r, double p, std::uint64_t seed) {
  if (r > n) throw std::invalid_argument("uniformity exceeds vertex count");
  if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("probability out of [0,1]");
  if (binom_big(n, r) > BigInt(200000000)) throw guard_error("too many potential edges");
  Rng rng(seed);
  std::vector<std::vector<int>> edges;
  if (p > 0.0) {
    auto c = first_combination(r);
    do {
      if (rng.bernoulli(p)) edges.push_back(c);
    } while (next_combination(c, n));
  }
  return make_hypergraph(n, r, std::move(edges));
}

// Configuration-style d-regular generator: n·d stubs are shuffled into groups
// of r; groups with a repeated vertex or duplicating an already-placed edge
// are dissolved back into a pool and re-drawn. Occasionally good groups are
// dissolved too so the pool cannot get stuck on a bad residue.
inline Hypergraph gen_random_regular(int n, int r, int d, std::uint64_t seed,
                                     int max_retries = 2000) {
  if (r > n) throw std::invalid_argument("uniformity exceeds vertex count");
  if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
  if (d < 0) throw std::invalid_argument("negative degree");
  if ((static_cast<long long>(n) * d) % r != 0)
    throw std::invalid_argument("infeasible: n*d must be divisible by r");
  long long n_groups = static_cast<long long>(n) * d / r;
  if (d == 0 || n == 0) return make_hypergraph(n, r, {});

  Rng rng(seed);
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < d; ++k) stubs.push_back(v);
  rng.shuffle(stubs);

  std::vector<std::vector<int>> groups(n_groups);
  for (long long g = 0; g < n_groups; ++g)
    groups[g] = std::vector<int>(stubs.begin() + g * r, stubs.begin() + (g + 1) * r);

  for (int round = 0; round < max_retries; ++round) {
    // Classify: a group is defective if it repeats a vertex or collides with
    // an edge already accepted in this pass.
    std::set<std::vector<int>> seen;
    std::vector<long long> defective;
    for (long long g = 0; g < n_groups; ++g) {
      std::vector<int> key = groups[g];
      std::sort(key.begin(), key.end());
      bool repeat = std::adjacent_find(key.begin(), key.end()) != key.end();
      if (repeat || !seen.insert(key).second) defective.push_back(g);
    }
    if (defective.empty()) {
      std::vector<std::vector<int>> edges(groups.begin(), groups.end());
      return make_hypergraph(n, r, std::move(edges));
    }
    // Every eighth round, dissolve as many random good groups as there are
    // defective ones to enlarge the pool.
    if (round % 8 == 7) {
      std::vector<long long> good;
      for (long long g = 0; g < n_groups; ++g)
        if (!std::binary_search(defective.begin(), defective.end(), g)) good.push_back(g);
      rng.shuffle(good);
      std::size_t extra = std::min(good.size(), defective.size());
      defective.insert(defective.end(), good.begin(), good.begin() + extra);
      std::sort(defective.begin(), defective.end());
    }
    std::vector<int> pool;
    for (long long g : defective)
      pool.insert(pool.end(), groups[g].begin(), groups[g].end());
    rng.shuffle(pool);
    for (std::size_t i = 0; i < defective.size(); ++i)
      groups[defective[i]] =
          std::vector<int>(pool.begin() + i * r, pool.begin() + (i + 1) * r);
  }
  throw numeric_error("retries exhausted while generating regular hypergraph");
}

}  // namespace hybisect
