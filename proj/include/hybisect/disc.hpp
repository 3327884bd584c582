#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hybisect/cut.hpp"
#include "hybisect/embedding.hpp"
#include "hybisect/hypergraph.hpp"
#include "hybisect/rational.hpp"
#include "hybisect/rng.hpp"
#include "hybisect/util.hpp"

namespace hybisect {

enum class DiscMethod { exhaustive, rounding, reduction };

// disc(U) = e(U) - p * C(|U|, r), exact. disc+/disc- are the extremes over
// all subsets (only filled by the exhaustive search).
struct DiscReport {
  std::vector<int> witness;
  Rat value;  // disc(witness)
  DiscMethod method = DiscMethod::rounding;
  bool exact = false;
  Rat disc_plus, disc_minus, disc;
  std::vector<int> witness_minus;
};

struct SplitDisc {
  std::vector<int> sizes;
  std::vector<std::vector<int>> parts;
  long long count = 0;  // edges meeting part i in exactly sizes[i] vertices
  Rat value;            // count - p * prod C(|U_i|, s_i)
};

inline Rat disc_of(const Hypergraph& h, const std::vector<int>& subset) {
  return Rat(induced_edge_count(h, subset)) -
         density(h) * Rat(binom_big(static_cast<long long>(subset.size()), h.r));
}

namespace detail {

using i128 = __int128;

struct ScaledBest {
  i128 value = 0;  // disc(U) * C(n, r); 0 matches the empty set
  std::uint32_t mask = 0;
  void consider_max(i128 v, std::uint32_t m) {
    if (v > value || (v == value && m < mask)) {
      value = v;
      mask = m;
    }
  }
  void consider_min(i128 v, std::uint32_t m) {
    if (v < value || (v == value && m < mask)) {
      value = v;
      mask = m;
    }
  }
};

inline std::vector<int> mask_to_subset(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (mask & (1u << v)) out.push_back(v);
  return out;
}

}  // namespace detail

// Exhaustive positive/negative discrepancy over all 2^n subsets via Gray-code
// enumeration with O(deg) incremental edge counting. Chunked over the high
// bits so the scan parallelizes with a deterministic merge.
inline DiscReport disc_exact(const Hypergraph& h) {
  if (h.n > 24) throw guard_error("too large for exhaustive subset enumeration (n <= 24)");
  DiscReport rep;
  rep.method = DiscMethod::exhaustive;
  rep.exact = true;
  long long cnr = (h.n >= h.r) ? binom_ll(h.n, h.r) : 0;
  if (cnr == 0 || h.edges.empty()) {
    // no possible edges or no edges at all: disc is identically zero
    rep.value = rep.disc_plus = rep.disc_minus = rep.disc = Rat(0);
    return rep;
  }
  const long long e_total = h.edge_count();
  auto inc = incidence_lists(h);
  std::vector<long long> ctab(h.n + 1);
  for (int k = 0; k <= h.n; ++k) ctab[k] = (k >= h.r) ? binom_ll(k, h.r) : 0;

  const int low_bits = std::min(h.n, 18);
  const int high_bits = h.n - low_bits;
  const std::size_t n_chunks = std::size_t{1} << high_bits;
  std::vector<detail::ScaledBest> best_plus(n_chunks), best_minus(n_chunks);

  parallel_chunks(n_chunks, [&](std::size_t chunk) {
    std::uint32_t base = static_cast<std::uint32_t>(chunk) << low_bits;
    std::vector<int> edge_in(h.edges.size(), 0);
    long long e_in = 0;
    int size = std::popcount(base);
    for (int v = low_bits; v < h.n; ++v)
      if (base & (1u << v))
        for (int ei : inc[v])
          if (++edge_in[ei] == h.r) e_in += h.mult[ei];

    detail::ScaledBest plus, minus;
    std::uint32_t mask = base;
    auto visit = [&]() {
      detail::i128 scaled = detail::i128(e_in) * cnr - detail::i128(e_total) * ctab[size];
      plus.consider_max(scaled, mask);
      minus.consider_min(scaled, mask);
    };
    visit();
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t i = 1; i < steps; ++i) {
      int v = std::countr_zero(i);
      std::uint32_t bit = 1u << v;
      bool adding = !(mask & bit);
      mask ^= bit;
      size += adding ? 1 : -1;
      if (adding) {
        for (int ei : inc[v])
          if (++edge_in[ei] == h.r) e_in += h.mult[ei];
      } else {
        for (int ei : inc[v])
          if (edge_in[ei]-- == h.r) e_in -= h.mult[ei];
      }
      visit();
    }
    best_plus[chunk] = plus;
    best_minus[chunk] = minus;
  });

  detail::ScaledBest plus, minus;
  for (std::size_t c = 0; c < n_chunks; ++c) {
    plus.consider_max(best_plus[c].value, best_plus[c].mask);
    minus.consider_min(best_minus[c].value, best_minus[c].mask);
  }
  auto scaled_to_rat = [&](detail::i128 v) {
    bool neg = v < 0;
    if (neg) v = -v;
    BigInt num = (BigInt(static_cast<std::uint64_t>(v >> 64)) << 64) |
                 BigInt(static_cast<std::uint64_t>(v));
    if (neg) num = -num;
    return Rat(num, BigInt(cnr));
  };
  rep.disc_plus = scaled_to_rat(plus.value);
  rep.disc_minus = -scaled_to_rat(minus.value);
  rep.disc = std::max(rep.disc_plus, rep.disc_minus);
  rep.witness = detail::mask_to_subset(plus.mask, h.n);
  rep.witness_minus = detail::mask_to_subset(minus.mask, h.n);
  rep.value = rep.disc_plus;
  return rep;
}

// e_{s1,..,sk}(U1,..,Uk) and its discrepancy, exact. An edge is counted iff
// it meets part i in exactly s_i vertices for every i (with sum s_i = r it is
// then contained in the union of the parts).
inline SplitDisc split_disc(const Hypergraph& h, const std::vector<std::vector<int>>& parts,
                            const std::vector<int>& sizes) {
  if (parts.size() != sizes.size())
    throw std::invalid_argument("parts/sizes length mismatch");
  long long size_sum = 0;
  for (int s : sizes) {
    if (s < 0) throw std::invalid_argument("negative part size");
    size_sum += s;
  }
  if (size_sum != h.r) throw std::invalid_argument("sizes must sum to the uniformity");
  std::vector<int> part_of(h.n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int v : parts[i]) {
      if (v < 0 || v >= h.n) throw std::invalid_argument("part vertex out of range");
      if (part_of[v] != -1) throw std::invalid_argument("parts are not disjoint");
      part_of[v] = static_cast<int>(i);
    }
  SplitDisc out;
  out.sizes = sizes;
  out.parts = parts;
  std::vector<int> cnt(parts.size());
  for (std::size_t ei = 0; ei < h.edges.size(); ++ei) {
    std::fill(cnt.begin(), cnt.end(), 0);
    bool outside = false;
    for (int v : h.edges[ei]) {
      int pv = part_of[v];
      if (pv < 0) {
        outside = true;
        break;
      }
      ++cnt[pv];
    }
    if (outside) continue;
    bool match = true;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (cnt[i] != sizes[i]) {
        match = false;
        break;
      }
    if (match) out.count += h.mult[ei];
  }
  Rat expected = density(h);
  for (std::size_t i = 0; i < parts.size(); ++i)
    expected *= Rat(binom_big(static_cast<long long>(parts[i].size()), sizes[i]));
  out.value = Rat(out.count) - expected;
  return out;
}

// |boundary(X)|: edges with at least one vertex in X (with multiplicity).
// Cross-checked against the split-count identity sum_{i<r} e_{r-i,i}(X, X^c).
inline long long boundary(const Hypergraph& h, const std::vector<int>& x) {
  std::vector<char> in(h.n, 0);
  for (int v : x) in[v] = 1;
  long long direct = 0;
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    for (int v : h.edges[i])
      if (in[v]) {
        direct += h.mult[i];
        break;
      }
  std::vector<int> comp;
  for (int v = 0; v < h.n; ++v)
    if (!in[v]) comp.push_back(v);
  long long via_splits = 0;
  for (int i = 0; i < h.r; ++i)
    via_splits += split_disc(h, {x, comp}, {h.r - i, i}).count;
  if (via_splits != direct)
    throw numeric_error("boundary split-count identity violated");
  return direct;
}

// Best disc(X) over hyperplane-rounding trials; the witness is the halfspace
// side itself, no balancing.
inline DiscReport disc_plus_heuristic(const Hypergraph& h, long long trials = 200,
                                      double alpha = 0.05, std::uint64_t seed = 1) {
  DiscReport rep;
  rep.method = DiscMethod::rounding;
  if (h.edge_count() == 0) {
    rep.value = Rat(0);
    return rep;
  }
  Embedding emb = build_embedding(h, alpha);
  Rat p = density(h);
  std::vector<Rat> values(trials);
  std::vector<std::vector<char>> members(trials);
  parallel_chunks(static_cast<std::size_t>(trials), [&](std::size_t t) {
    auto in_x = detail::round_membership(emb, seed, static_cast<long long>(t));
    long long e_in = 0;
    long long size = 0;
    for (char b : in_x) size += b;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      bool inside = true;
      for (int v : h.edges[i])
        if (!in_x[v]) {
          inside = false;
          break;
        }
      if (inside) e_in += h.mult[i];
    }
    values[t] = Rat(e_in) - p * Rat(binom_big(size, h.r));
    members[t] = std::move(in_x);
  });
  long long best = 0;
  for (long long t = 1; t < trials; ++t)
    if (values[t] > values[best]) best = t;
  rep.value = values[best];
  for (int v = 0; v < h.n; ++v)
    if (members[best][v]) rep.witness.push_back(v);
  return rep;
}

// beta_i = prod_{j=0}^{i-1} (b-j)/(s-j): the shrink factor of a split
// discrepancy when a uniformly random b-subset Y of an s-set stands in for
// the full set.
inline Rat beta_coeff(int i, int s, int b) {
  if (i < 0 || b < 0 || b > s) throw std::invalid_argument("bad beta parameters");
  if (i > s) throw std::invalid_argument("beta index exceeds ground set");
  Rat out(1);
  for (int j = 0; j < i; ++j) out *= Rat(BigInt(b - j), BigInt(s - j));
  return out;
}

struct BetaIdentityReport {
  bool ok = false;
  int ground_size = 0;  // s = |X^c|
  int subset_size = 0;  // b = floor(s/2)
};

// For Y a uniformly random b-subset of X^c,
//   E disc_{r-i,i}(X, Y) = beta_i * disc_{r-i,i}(X, X^c)
// for every i; verified exactly by enumerating all C(s, b) subsets.
inline BetaIdentityReport beta_identity_check(const Hypergraph& h, const std::vector<int>& x) {
  std::vector<char> in_x(h.n, 0);
  for (int v : x) in_x[v] = 1;
  std::vector<int> comp;
  for (int v = 0; v < h.n; ++v)
    if (!in_x[v]) comp.push_back(v);
  int s = static_cast<int>(comp.size());
  if (s > 12) throw guard_error("beta identity guard: |X^c| <= 12");
  int b = s / 2;
  BetaIdentityReport rep;
  rep.ground_size = s;
  rep.subset_size = b;

  // accumulate e_{r-i,i}(X, Y) summed over all b-subsets Y
  std::vector<BigInt> sums(h.r + 1, BigInt(0));
  BigInt n_subsets = binom_big(s, b);
  auto tally = [&](const std::vector<int>& pick) {
    std::vector<char> in_y(h.n, 0);
    for (int idx : pick) in_y[comp[idx]] = 1;
    for (std::size_t ei = 0; ei < h.edges.size(); ++ei) {
      int cx = 0, cy = 0;
      bool outside = false;
      for (int v : h.edges[ei]) {
        if (in_x[v])
          ++cx;
        else if (in_y[v])
          ++cy;
        else {
          outside = true;
          break;
        }
      }
      if (!outside && cx + cy == h.r) sums[cy] += BigInt(h.mult[ei]);
    }
  };
  if (b == 0) {
    tally({});
  } else {
    auto c = first_combination(b);
    do {
      tally(c);
    } while (next_combination(c, s));
  }

  rep.ok = true;
  Rat p = density(h);
  for (int i = 0; i <= h.r; ++i) {
    if (i > s) continue;  // no i vertices available in X^c
    // E disc_{r-i,i}(X, Y) over all subsets
    Rat mean_count = Rat(sums[i], n_subsets);
    Rat expected_split = p * Rat(binom_big(static_cast<long long>(x.size()), h.r - i)) *
                         Rat(binom_big(b, i));
    Rat lhs = mean_count - expected_split;
    SplitDisc full = split_disc(h, {x, comp}, {h.r - i, i});
    Rat rhs = beta_coeff(i, s, b) * full.value;
    if (lhs != rhs) rep.ok = false;
  }
  return rep;
}

// Samples random floor(|X^c|/2)-subsets Y of X^c and returns the best
// disc(X u Y) with its witness.
inline DiscReport maxdeg_witness(const Hypergraph& h, const std::vector<int>& x,
                                 std::uint64_t seed, int samples = 200) {
  std::vector<char> in_x(h.n, 0);
  for (int v : x) in_x[v] = 1;
  std::vector<int> comp;
  for (int v = 0; v < h.n; ++v)
    if (!in_x[v]) comp.push_back(v);
  int s = static_cast<int>(comp.size());
  int b = s / 2;
  DiscReport rep;
  rep.method = DiscMethod::reduction;
  bool have = false;
  for (int k = 0; k < samples; ++k) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(k));
    std::vector<int> u = x;
    for (int idx : rng.sample_subset(s, b)) u.push_back(comp[idx]);
    std::sort(u.begin(), u.end());
    Rat val = disc_of(h, u);
    if (!have || val > rep.value) {
      have = true;
      rep.value = val;
      rep.witness = u;
    }
  }
  if (!have) {  // X^c empty or samples == 0: fall back to X itself
    rep.witness = x;
    rep.value = disc_of(h, x);
  }
  return rep;
}

// Large-degree pipeline: X collects vertices of degree above C*d. If the
// edges touching X dominate, a witness is searched around X directly;
// otherwise the rounding heuristic runs on H' = H - boundary(X) and the
// witness is re-evaluated in H, where
//   disc_H(U) >= disc_H'(U) - |boundary(X)|
// holds exactly and is asserted.
inline DiscReport large_degree_reduction(const Hypergraph& h, double c_factor = 8.0,
                                         std::uint64_t seed = 1, long long trials = 200,
                                         double alpha = 0.05) {
  if (c_factor <= 0) throw std::invalid_argument("C must be positive");
  Rat threshold = Rat(c_factor) * average_degree(h);
  auto deg = degrees(h);
  std::vector<int> x;
  for (int v = 0; v < h.n; ++v)
    if (Rat(deg[v]) > threshold) x.push_back(v);
  long long bnd = boundary(h, x);

  if (2 * bnd >= h.edge_count() && !x.empty()) {
    DiscReport rep = maxdeg_witness(h, x, seed, static_cast<int>(trials));
    rep.method = DiscMethod::reduction;
    return rep;
  }

  // keep only edges avoiding X
  std::vector<char> in_x(h.n, 0);
  for (int v : x) in_x[v] = 1;
  Hypergraph rest;
  rest.n = h.n;
  rest.r = h.r;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    bool touches = false;
    for (int v : h.edges[i])
      if (in_x[v]) {
        touches = true;
        break;
      }
    if (!touches) {
      rest.edges.push_back(h.edges[i]);
      rest.mult.push_back(h.mult[i]);
    }
  }
  DiscReport inner = disc_plus_heuristic(rest, trials, alpha, seed);
  DiscReport rep;
  rep.method = DiscMethod::reduction;
  rep.witness = inner.witness;
  rep.value = disc_of(h, inner.witness);
  if (rep.value < inner.value - Rat(bnd))
    throw numeric_error("boundary correction inequality violated");
  return rep;
}

struct PolyIdentityReport {
  bool ok = false;
  int grid_points = 0;
  Rat max_abs_diff;
};

// f(q) = E disc(Z u Y) for Z a q-random subset of X equals the polynomial
// sum_i q^i disc_{i,r-i}(X, Y); checked exactly on a rational grid by full
// enumeration of Z.
inline PolyIdentityReport poly_identity_check(const Hypergraph& h, const std::vector<int>& x,
                                              const std::vector<int>& y, int grid_points = 21) {
  if (static_cast<int>(x.size()) > 14) throw guard_error("poly identity guard: |X| <= 14");
  {
    std::vector<char> seen(h.n, 0);
    for (int v : x) seen[v] = 1;
    for (int v : y)
      if (seen[v]) throw std::invalid_argument("X and Y must be disjoint");
  }
  const int m = static_cast<int>(x.size());
  const Rat p = density(h);

  // S_k = sum over k-subsets Z of X of e(Z u Y); |Z u Y| = k + |Y| throughout
  std::vector<long long> s_k(m + 1, 0);
  std::vector<char> in(h.n, 0);
  for (int v : y) in[v] = 1;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<char> inz = in;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) inz[x[i]] = 1;
    long long e_in = 0;
    for (std::size_t ei = 0; ei < h.edges.size(); ++ei) {
      bool inside = true;
      for (int v : h.edges[ei])
        if (!inz[v]) {
          inside = false;
          break;
        }
      if (inside) e_in += h.mult[ei];
    }
    s_k[std::popcount(mask)] += e_in;
  }
  std::vector<Rat> avg_disc(m + 1);
  for (int k = 0; k <= m; ++k)
    avg_disc[k] = Rat(s_k[k]) - p * Rat(binom_big(m, k)) *
                                    Rat(binom_big(k + static_cast<long long>(y.size()), h.r));

  std::vector<Rat> split(h.r + 1);
  for (int i = 0; i <= h.r; ++i) split[i] = split_disc(h, {x, y}, {i, h.r - i}).value;

  PolyIdentityReport rep;
  rep.grid_points = grid_points;
  rep.ok = true;
  rep.max_abs_diff = Rat(0);
  for (int g = 0; g < grid_points; ++g) {
    Rat q(g, grid_points > 1 ? grid_points - 1 : 1);
    Rat lhs(0);
    for (int k = 0; k <= m; ++k)
      lhs += rat_pow(q, k) * rat_pow(Rat(1) - q, m - k) * avg_disc[k];
    Rat rhs(0);
    for (int i = 0; i <= h.r; ++i) rhs += rat_pow(q, i) * split[i];
    Rat diff = lhs - rhs;
    if (diff < 0) diff = -diff;
    if (diff > rep.max_abs_diff) rep.max_abs_diff = diff;
    if (diff != 0) rep.ok = false;
  }
  return rep;
}

struct ShadowDecompositionReport {
  bool edges_ok = false;
  bool disc_ok = false;
  bool density_identity_ok = false;
  long long e_shadow = 0;
  Rat disc_shadow;
};

// e_{H_t}(U) = sum_{j=t}^r C(j,t) e_{j,r-j}(H; U, U^c) and the matching
// discrepancy decomposition, both exact; also p_t = C(n-t, r-t) p.
inline ShadowDecompositionReport shadow_decomposition_check(const Hypergraph& h,
                                                            const std::vector<int>& u, int t) {
  if (t < 2 || t > h.r) throw std::invalid_argument("shadow order out of range");
  Hypergraph ht = shadow(h, t);
  std::vector<char> in(h.n, 0);
  for (int v : u) in[v] = 1;
  std::vector<int> comp;
  for (int v = 0; v < h.n; ++v)
    if (!in[v]) comp.push_back(v);

  ShadowDecompositionReport rep;
  rep.e_shadow = induced_edge_count(ht, u);
  long long rhs_edges = 0;
  Rat rhs_disc(0);
  for (int j = t; j <= h.r; ++j) {
    SplitDisc sd = split_disc(h, {u, comp}, {j, h.r - j});
    long long cjt = binom_ll(j, t);
    rhs_edges += cjt * sd.count;
    rhs_disc += Rat(cjt) * sd.value;
  }
  rep.edges_ok = rep.e_shadow == rhs_edges;
  Rat pt = density(ht);
  rep.disc_shadow =
      Rat(rep.e_shadow) - pt * Rat(binom_big(static_cast<long long>(u.size()), t));
  rep.disc_ok = rep.disc_shadow == rhs_disc;
  rep.density_identity_ok = pt == Rat(binom_big(h.n - t, h.r - t)) * density(h);
  return rep;
}

// Shadow densities p_t for t = 2..r, measured on materialized shadows.
inline std::vector<Rat> shadow_densities(const Hypergraph& h) {
  std::vector<Rat> out;
  for (int t = 2; t <= h.r; ++t) out.push_back(density(shadow(h, t)));
  return out;
}

struct DensityWindowReport {
  bool applicable = false;  // 1 <= d <= C(n-1, r-1)/2
  int t_found = -1;
  bool ok = false;
};

// Whenever 1 <= d <= C(n-1,r-1)/2, some t in {2..r} has 1/(2n) <= p_t <= 1/2.
inline DensityWindowReport density_window_check(const Hypergraph& h) {
  DensityWindowReport rep;
  Rat d = average_degree(h);
  rep.applicable = d >= Rat(1) && d <= Rat(binom_big(h.n - 1, h.r - 1), BigInt(2));
  Rat p = density(h);
  for (int t = h.r; t >= 2; --t) {
    Rat pt = Rat(binom_big(h.n - t, h.r - t)) * p;
    if (pt >= Rat(BigInt(1), BigInt(2) * h.n) && pt <= Rat(BigInt(1), BigInt(2))) {
      rep.t_found = t;
      break;
    }
  }
  rep.ok = !rep.applicable || rep.t_found != -1;
  return rep;
}

struct BisectionOracle {
  long long bw = 0;
  std::vector<int> witness;  // the floor(n/2)-sized side
};

// Exact minimum bisection by enumerating equipartitions (n <= 20). For even n
// vertex 0 is pinned to the first side so each bisection is visited once.
inline BisectionOracle oracle_bw(const Hypergraph& h) {
  if (h.n > 20) throw guard_error("too large for exhaustive bisection (n <= 20)");
  BisectionOracle out;
  if (h.n < 2) return out;
  int f = h.n / 2;
  std::vector<char> in(h.n, 0);
  bool first = true;
  auto consider = [&](const std::vector<int>& side) {
    std::fill(in.begin(), in.end(), 0);
    for (int v : side) in[v] = 1;
    long long cross = 0;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      int cnt = 0;
      for (int v : h.edges[i])
        if (in[v]) ++cnt;
      if (cnt > 0 && cnt < static_cast<int>(h.edges[i].size())) cross += h.mult[i];
    }
    if (first || cross < out.bw) {
      first = false;
      out.bw = cross;
      out.witness = side;
    }
  };
  if (h.n % 2 == 0) {
    auto c = first_combination(f - 1);
    std::vector<int> side(f);
    do {
      side[0] = 0;
      for (int i = 0; i < f - 1; ++i) side[i + 1] = c[i] + 1;
      consider(side);
    } while (next_combination(c, h.n - 1));
  } else {
    auto c = first_combination(f);
    do {
      consider(c);
    } while (next_combination(c, h.n));
  }
  return out;
}

// C(floor(n/2), r) + C(ceil(n/2), r) <= 2^{1-r} C(n, r), exact.
inline bool equipartition_binomial_inequality(int n, int r) {
  BigInt lhs = bigint_pow(BigInt(2), r - 1) * (binom_big(n / 2, r) + binom_big(n - n / 2, r));
  return lhs <= binom_big(n, r);
}

}  // namespace hybisect
