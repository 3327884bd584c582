#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hybisect/rng.hpp"
#include "hybisect/util.hpp"

namespace hybisect {

// A tuple of r unit vectors in dimension m >= r. mu(v_1,..,v_r) is the
// probability that all of them land in a uniformly random linear half-space;
// it only depends on the Gram matrix.
struct VectorTuple {
  std::vector<std::vector<double>> vs;
  double unit_tol = 1e-8;

  int r() const { return static_cast<int>(vs.size()); }
  int dim() const { return vs.empty() ? 0 : static_cast<int>(vs[0].size()); }
};

inline VectorTuple make_unit_tuple(std::vector<std::vector<double>> rows,
                                   double unit_tol = 1e-8) {
  VectorTuple t;
  t.vs = std::move(rows);
  t.unit_tol = unit_tol;
  if (t.vs.empty()) throw std::invalid_argument("empty vector tuple");
  std::size_t m = t.vs[0].size();
  if (m < t.vs.size()) throw std::invalid_argument("dimension below tuple size");
  for (const auto& v : t.vs) {
    if (v.size() != m) throw std::invalid_argument("ragged vector tuple");
    double s = 0;
    for (double x : v) s += x * x;
    if (std::fabs(std::sqrt(s) - 1.0) > unit_tol)
      throw std::invalid_argument("vector is not unit length");
  }
  return t;
}

inline std::vector<std::vector<double>> gram(const VectorTuple& t) {
  int r = t.r();
  std::vector<std::vector<double>> g(r, std::vector<double>(r, 0.0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j <= i; ++j) {
      double s = 0;
      for (int k = 0; k < t.dim(); ++k) s += t.vs[i][k] * t.vs[j][k];
      g[i][j] = g[j][i] = s;
    }
  return g;
}

// Cholesky-style factorization of an r x r Gram matrix into r row vectors in
// R^r, lower-triangular with nonnegative diagonal. Rank deficiency is handled
// by clamping non-positive pivots to zero. The Gram matrix (hence mu) is
// preserved.
inline VectorTuple tuple_from_gram(const std::vector<std::vector<double>>& g,
                                   double unit_tol = 1e-8) {
  int r = static_cast<int>(g.size());
  if (r == 0) throw std::invalid_argument("empty Gram matrix");
  for (const auto& row : g)
    if (static_cast<int>(row.size()) != r) throw std::invalid_argument("Gram matrix not square");
  std::vector<std::vector<double>> L(r, std::vector<double>(r, 0.0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = g[i][j];
      for (int k = 0; k < j; ++k) s -= L[i][k] * L[j][k];
      if (j == i) {
        // pivot clamp for numerical rank deficiency
        L[i][i] = (s > 1e-12 * std::fabs(g[i][i])) ? std::sqrt(s) : 0.0;
      } else {
        L[i][j] = (L[j][j] > 0.0) ? s / L[j][j] : 0.0;
      }
    }
  }
  VectorTuple t;
  t.vs = std::move(L);
  t.unit_tol = unit_tol;
  return t;
}

inline VectorTuple reduce_to_r_dims(const VectorTuple& t) {
  return tuple_from_gram(gram(t), t.unit_tol);
}

// Exact two-vector case: mu = (pi - angle) / (2 pi).
inline double mu_exact_r2(double angle) {
  if (angle < 0.0 || angle > 3.14159265358979323847)
    throw std::invalid_argument("angle out of [0, pi]");
  return (3.14159265358979323846 - angle) / (2.0 * 3.14159265358979323846);
}

struct MuEstimate {
  double mu = 0.0;
  long long trials = 0;
  double std_err = 0.0;
  std::uint64_t seed = 0;
};

// Monte-Carlo estimate of mu. The direction w is sampled as i.i.d. Gaussian
// coordinates in the reduced dimension; only signs of inner products matter,
// so w is never normalized. Ties <w,v> = 0 count as inside. Trials run in
// fixed-size chunks with per-chunk RNG substreams, so the result is
// independent of the thread schedule.
inline MuEstimate mu_estimate(const VectorTuple& tuple, long long trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  VectorTuple red = reduce_to_r_dims(tuple);
  const int r = red.r();
  const long long chunk_size = 1 << 16;
  const std::size_t n_chunks = static_cast<std::size_t>((trials + chunk_size - 1) / chunk_size);
  std::vector<long long> hits(n_chunks, 0);

  // flatten rows for the hot loop; row i has i+1 leading entries
  std::vector<double> flat(static_cast<std::size_t>(r) * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) flat[static_cast<std::size_t>(i) * r + j] = red.vs[i][j];

  parallel_chunks(n_chunks, [&](std::size_t c) {
    Rng rng = Rng::stream(seed, c);
    long long lo = static_cast<long long>(c) * chunk_size;
    long long hi = std::min(trials, lo + chunk_size);
    long long local = 0;
    std::vector<double> w(r);
    for (long long t = lo; t < hi; ++t) {
      for (int k = 0; k < r; ++k) w[k] = rng.gaussian();
      bool all_in = true;
      for (int i = 0; i < r && all_in; ++i) {
        double dot = 0;
        const double* row = &flat[static_cast<std::size_t>(i) * r];
        for (int j = 0; j <= i; ++j) dot += row[j] * w[j];
        all_in = dot >= 0.0;
      }
      if (all_in) ++local;
    }
    hits[c] = local;
  });

  long long total = 0;
  for (long long hcount : hits) total += hcount;
  MuEstimate est;
  est.mu = static_cast<double>(total) / static_cast<double>(trials);
  est.trials = trials;
  est.std_err = std::sqrt(est.mu * (1.0 - est.mu) / static_cast<double>(trials));
  est.seed = seed;
  return est;
}

struct BracketPoint {
  double offdiag_sum = 0.0;
  double mu_hat = 0.0;
  double std_err = 0.0;
  double ratio = 0.0;
};

struct BracketReport {
  int r = 0;
  double alpha_test = 0.0;
  long long trials = 0;
  std::uint64_t seed = 0;
  std::vector<BracketPoint> points;
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  bool all_positive_finite = false;
};

// Samples Gram matrices with small nonnegative off-diagonal entries and
// reports the empirical ratios (mu_hat - 2^-r) / sum of off-diagonals.
// Off-diagonals are kept in [0.4*alpha_test, alpha_test]: with a vanishing
// pair sum the ratio is 0/0 and carries no information (an all-zero
// off-diagonal sample is excluded for exactly that reason).
inline BracketReport mu_bracket_check(int r, int gram_samples, long long trials,
                                      std::uint64_t seed, double alpha_test = 0.05) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (alpha_test <= 0.0 || alpha_test > 0.5) throw std::invalid_argument("alpha_test out of range");
  BracketReport rep;
  rep.r = r;
  rep.alpha_test = alpha_test;
  rep.trials = trials;
  rep.seed = seed;
  double base = std::pow(0.5, r);
  for (int s = 0; s < gram_samples; ++s) {
    Rng grng = Rng::stream(seed ^ 0x6d757Fu, static_cast<std::uint64_t>(s));
    std::vector<std::vector<double>> g(r, std::vector<double>(r, 0.0));
    double offsum = 0.0;
    for (int i = 0; i < r; ++i) g[i][i] = 1.0;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        double a = grng.uniform(0.4 * alpha_test, alpha_test);
        g[i][j] = g[j][i] = a;
        offsum += a;
      }
    if (offsum == 0.0) continue;
    VectorTuple t = tuple_from_gram(g);
    MuEstimate est = mu_estimate(t, trials, splitmix64(seed) + static_cast<std::uint64_t>(s));
    BracketPoint pt;
    pt.offdiag_sum = offsum;
    pt.mu_hat = est.mu;
    pt.std_err = est.std_err;
    pt.ratio = (est.mu - base) / offsum;
    rep.points.push_back(pt);
  }
  rep.all_positive_finite = !rep.points.empty();
  for (std::size_t i = 0; i < rep.points.size(); ++i) {
    double x = rep.points[i].ratio;
    if (!(x > 0.0) || !std::isfinite(x)) rep.all_positive_finite = false;
    if (i == 0 || x < rep.ratio_min) rep.ratio_min = x;
    if (i == 0 || x > rep.ratio_max) rep.ratio_max = x;
  }
  return rep;
}

}  // namespace hybisect
