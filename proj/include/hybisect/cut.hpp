#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hybisect/embedding.hpp"
#include "hybisect/hypergraph.hpp"
#include "hybisect/rational.hpp"
#include "hybisect/rng.hpp"

namespace hybisect {

struct CutResult {
  std::vector<int> x_side, y_side;  // sorted, disjoint, covering 0..n-1
  long long e_x = 0;                // edges fully inside X (with multiplicity)
  long long e_y = 0;
  long long cross = 0;              // edges meeting both sides
  long long objective = 0;          // e_x + e_y - Delta * ||X| - |Y||
  bool balanced = false;
  bool has_advantage = false;
  Rat advantage;                    // asymptote baseline - cross, equipartitions only
  std::uint64_t seed = 0;
  long long trial_index = -1;
};

enum class BalanceMode { paper, greedy };

namespace detail {

struct EdgeCounts {
  long long e_x = 0, e_y = 0, cross = 0;
};

// sum over edges of (1 - 2^{1-|e|}), the large-n limit of the expected size
// of a random bisection
inline Rat asymptote_from_edges(const std::vector<std::vector<int>>& edges,
                                const std::vector<long long>& mult) {
  Rat total(0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int s = static_cast<int>(edges[i].size());
    total += Rat(mult[i]) * (Rat(1) - Rat(BigInt(2), bigint_pow(BigInt(2), s)));
  }
  return total;
}

inline EdgeCounts classify_edges(const std::vector<std::vector<int>>& edges,
                                 const std::vector<long long>& mult,
                                 const std::vector<char>& in_x) {
  EdgeCounts c;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::size_t inside = 0;
    for (int v : edges[i])
      if (in_x[v]) ++inside;
    if (inside == edges[i].size())
      c.e_x += mult[i];
    else if (inside == 0)
      c.e_y += mult[i];
    else
      c.cross += mult[i];
  }
  return c;
}

inline CutResult cut_from_membership(const Embedding& e, const std::vector<char>& in_x,
                                     std::uint64_t seed, long long trial) {
  CutResult res;
  for (int v = 0; v < e.n; ++v)
    (in_x[v] ? res.x_side : res.y_side).push_back(v);
  EdgeCounts counts = classify_edges(e.edges, e.mult, in_x);
  res.e_x = counts.e_x;
  res.e_y = counts.e_y;
  res.cross = counts.cross;
  long long imbalance =
      std::llabs(static_cast<long long>(res.x_side.size()) - static_cast<long long>(res.y_side.size()));
  res.objective = res.e_x + res.e_y - e.max_deg * imbalance;
  res.balanced = imbalance <= 1;
  if (res.balanced) {
    res.has_advantage = true;
    res.advantage = asymptote_from_edges(e.edges, e.mult) - Rat(res.cross);
  }
  res.seed = seed;
  res.trial_index = trial;
  return res;
}

// Membership from one Gaussian hyperplane draw. sign(<y_v, w>) = sign(<x_v, w>),
// and <x_v, w> = w(v) + scale * sum of w over co-edge neighbors. Ties (exact
// zero) go to X.
inline std::vector<char> round_membership(const Embedding& e, std::uint64_t seed,
                                          long long trial) {
  Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(trial));
  std::vector<double> w(e.n);
  for (int v = 0; v < e.n; ++v) w[v] = rng.gaussian();
  std::vector<char> in_x(e.n, 0);
  for (int v = 0; v < e.n; ++v) {
    double acc = 0.0;
    for (int u : e.nbr[v]) acc += w[u];
    double score = w[v] + e.scale * acc;
    in_x[v] = score >= 0.0 ? 1 : 0;
  }
  return in_x;
}

}  // namespace detail

inline CutResult hyperplane_round(const Embedding& e, std::uint64_t seed) {
  auto in_x = detail::round_membership(e, seed, 0);
  return detail::cut_from_membership(e, in_x, seed, 0);
}

// Moves vertices from the larger side to the smaller until the sizes differ by
// at most one. Mode `paper` moves a seeded-random subset; mode `greedy` moves,
// one at a time, the vertex destroying the fewest internal edges of the larger
// side. Either way each move costs at most Delta internal edges, so
// e_x + e_y drops by at most (moves * Delta).
template <typename H>
CutResult balance(const CutResult& cut, const H& h, BalanceMode mode,
                  std::uint64_t seed = 0) {
  std::vector<char> in_x(h.n, 0);
  for (int v : cut.x_side) in_x[v] = 1;
  long long nx = static_cast<long long>(cut.x_side.size());
  long long ny = static_cast<long long>(cut.y_side.size());
  bool x_is_small = nx <= ny;
  // membership of the smaller part, which receives vertices
  std::vector<char> small = in_x;
  if (!x_is_small)
    for (int v = 0; v < h.n; ++v) small[v] = !in_x[v];
  long long target = h.n / 2;
  long long need = target - std::min(nx, ny);

  if (need > 0) {
    std::vector<int> large_side;
    for (int v = 0; v < h.n; ++v)
      if (!small[v]) large_side.push_back(v);
    if (mode == BalanceMode::paper) {
      Rng rng = Rng::stream(seed, 0x62616cULL);
      std::vector<int> picks = rng.sample_subset(static_cast<int>(large_side.size()),
                                                 static_cast<int>(need));
      for (int idx : picks) small[large_side[idx]] = 1;
    } else {
      // counts of large-side vertices per edge; an edge is internal to the
      // large side iff its count equals its size
      std::vector<int> cnt(h.edges.size(), 0);
      for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (int v : h.edges[i])
          if (!small[v]) ++cnt[i];
      auto inc = incidence_lists(h);
      std::vector<char> moved(h.n, 0);
      for (long long step = 0; step < need; ++step) {
        long long best_cost = -1;
        int best_v = -1;
        for (int v : large_side) {
          if (small[v] || moved[v]) continue;
          long long cost = 0;
          for (int ei : inc[v])
            if (cnt[ei] == static_cast<int>(h.edges[ei].size())) cost += h.mult[ei];
          if (best_v < 0 || cost < best_cost) {
            best_cost = cost;
            best_v = v;
          }
        }
        small[best_v] = 1;
        moved[best_v] = 1;
        for (int ei : inc[best_v]) --cnt[ei];
      }
    }
  }

  // rebuild counts from scratch for the final, balanced cut
  CutResult out;
  for (int v = 0; v < h.n; ++v)
    (small[v] ? out.x_side : out.y_side).push_back(v);
  if (out.x_side.size() > out.y_side.size()) std::swap(out.x_side, out.y_side);
  std::vector<char> final_x(h.n, 0);
  for (int v : out.x_side) final_x[v] = 1;
  auto counts = detail::classify_edges(h.edges, h.mult, final_x);
  out.e_x = counts.e_x;
  out.e_y = counts.e_y;
  out.cross = counts.cross;
  long long imbalance = static_cast<long long>(out.y_side.size()) -
                        static_cast<long long>(out.x_side.size());
  out.objective = out.e_x + out.e_y - max_degree(h) * imbalance;
  out.balanced = imbalance <= 1;
  if (out.balanced) {
    out.has_advantage = true;
    out.advantage = detail::asymptote_from_edges(h.edges, h.mult) - Rat(out.cross);
  }
  out.seed = cut.seed;
  out.trial_index = cut.trial_index;
  return out;
}

// Exact expected bisection size under a uniformly random equipartition.
inline Rat random_bisection_expectation(const Hypergraph& h) {
  if (h.n < 1) return Rat(0);
  long long f = h.n / 2, c = h.n - f;
  BigInt denom = binom_big(h.n, f);
  Rat p_uncut = Rat(binom_big(h.n - h.r, f - h.r) + binom_big(h.n - h.r, c - h.r), denom);
  return Rat(h.edge_count()) * (Rat(1) - p_uncut);
}

inline Rat random_bisection_expectation(const MixedHypergraph& h) {
  if (h.n < 1) return Rat(0);
  long long f = h.n / 2, c = h.n - f;
  BigInt denom = binom_big(h.n, f);
  Rat total(0);
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    long long s = static_cast<long long>(h.edges[i].size());
    Rat p_uncut = Rat(binom_big(h.n - s, f - s) + binom_big(h.n - s, c - s), denom);
    total += Rat(h.mult[i]) * (Rat(1) - p_uncut);
  }
  return total;
}

// Asymptotic baseline e(H) (1 - 2^{1-r}), the n -> infinity limit of the above.
inline Rat asymptote_baseline(const Hypergraph& h) {
  return Rat(h.edge_count()) * (Rat(1) - Rat(BigInt(2), bigint_pow(BigInt(2), h.r)));
}

inline Rat asymptote_baseline(const MixedHypergraph& h) {
  Rat total(0);
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    int s = static_cast<int>(h.edges[i].size());
    total += Rat(h.mult[i]) * (Rat(1) - Rat(BigInt(2), bigint_pow(BigInt(2), s)));
  }
  return total;
}

struct BisectResult {
  CutResult cut;               // balanced; advantage filled in
  Rat expectation_baseline;    // exact random-equipartition expectation
  Rat asymptote;               // e(H)(1 - 2^{1-r}) or the per-size sum
  long long best_pre_objective = 0;
  long long chosen_trial = -1;
  long long trials = 0;
};

namespace detail {

template <typename H>
BisectResult bisect_impl(const H& h, long long trials, double alpha, std::uint64_t seed,
                         BalanceMode mode) {
  validate(h);
  BisectResult res;
  res.expectation_baseline = random_bisection_expectation(h);
  res.asymptote = asymptote_baseline(h);
  res.trials = trials;

  if (max_degree(h) == 0) {
    // no edges: any equipartition is optimal
    CutResult cut;
    for (int v = 0; v < h.n; ++v)
      (v < h.n / 2 ? cut.x_side : cut.y_side).push_back(v);
    cut.balanced = true;
    cut.has_advantage = true;
    cut.advantage = res.asymptote;
    cut.seed = seed;
    res.cut = cut;
    return res;
  }
  if (trials < 1) throw std::invalid_argument("trials must be positive");

  Embedding emb = build_embedding(h, alpha);
  std::vector<long long> objectives(trials);
  parallel_chunks(static_cast<std::size_t>(trials), [&](std::size_t t) {
    auto in_x = round_membership(emb, seed, static_cast<long long>(t));
    auto counts = classify_edges(emb.edges, emb.mult, in_x);
    long long nx = 0;
    for (char b : in_x) nx += b;
    long long imbalance = std::llabs(2 * nx - emb.n);
    objectives[t] = counts.e_x + counts.e_y - emb.max_deg * imbalance;
  });
  long long best = 0;
  for (long long t = 1; t < trials; ++t)
    if (objectives[t] > objectives[best]) best = t;

  auto in_x = round_membership(emb, seed, best);
  CutResult raw = cut_from_membership(emb, in_x, seed, best);
  res.best_pre_objective = raw.objective;
  res.chosen_trial = best;

  CutResult bal = balance(raw, h, mode, seed);
  bal.has_advantage = true;
  bal.advantage = res.asymptote - Rat(bal.cross);
  res.cut = bal;
  return res;
}

}  // namespace detail

// Best-of-T driver: builds the embedding, rounds `trials` independent
// hyperplanes, keeps the trial maximizing e_x + e_y - Delta*||X|-|Y||, and
// balances it into an equipartition.
inline BisectResult bisect(const Hypergraph& h, long long trials = 200, double alpha = 0.05,
                           std::uint64_t seed = 1, BalanceMode mode = BalanceMode::greedy) {
  return detail::bisect_impl(h, trials, alpha, seed, mode);
}

// Same driver for edges of mixed sizes; the advantage is measured against
// sum over edges of (1 - 2^{1-|e|}) and the embedding scale uses the maximum
// edge size.
inline BisectResult bisect_mixed(const MixedHypergraph& h, long long trials = 200,
                                 double alpha = 0.05, std::uint64_t seed = 1,
                                 BalanceMode mode = BalanceMode::greedy) {
  return detail::bisect_impl(h, trials, alpha, seed, mode);
}

}  // namespace hybisect
