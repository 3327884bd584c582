#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hybisect/hypergraph.hpp"
#include "hybisect/rational.hpp"
#include "hybisect/rng.hpp"
#include "hybisect/util.hpp"

namespace hybisect {

// Adjacency map tau_H(x_1,..,x_r) = 1/(r-1)! sum over ordered vertex tuples
// whose underlying set is an edge (multiplicity-weighted) of prod x_i(v_i),
// evaluated edge-by-edge as a permanent. Works over any field-like scalar
// (double for search, Rat for exact identity tests).
template <typename T>
T tau_eval(const Hypergraph& h, const std::vector<std::vector<T>>& xs) {
  if (static_cast<int>(xs.size()) != h.r) throw std::invalid_argument("need r argument vectors");
  if (h.r > 6) throw guard_error("permanent expansion limited to r <= 6");
  for (const auto& x : xs)
    if (static_cast<int>(x.size()) != h.n) throw std::invalid_argument("vector dimension mismatch");
  long long fact = 1;
  for (int i = 2; i < h.r; ++i) fact *= i;

  T total(0);
  std::vector<int> perm(h.r);
  for (std::size_t ei = 0; ei < h.edges.size(); ++ei) {
    const auto& e = h.edges[ei];
    T per(0);
    for (int i = 0; i < h.r; ++i) perm[i] = i;
    do {
      T term(1);
      for (int i = 0; i < h.r; ++i) term *= xs[i][e[perm[i]]];
      per += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    total += T(h.mult[ei]) * per;
  }
  return total / T(fact);
}

// sigma_H = tau_H - (r e(H) / n^r) J, so the all-ones input evaluates to zero.
template <typename T>
T sigma_eval(const Hypergraph& h, const std::vector<std::vector<T>>& xs) {
  T tau = tau_eval(h, xs);
  T prod(1);
  for (const auto& x : xs) {
    T s(0);
    for (const T& v : x) s += v;
    prod *= s;
  }
  T npow(1);
  for (int i = 0; i < h.r; ++i) npow *= T(h.n);
  // (prod / npow) first: equals exactly 1 for the all-ones input
  return tau - T(h.r) * T(h.edge_count()) * (prod / npow);
}

// Diagonal fast path: sigma_H(x,..,x) without the permanent.
template <typename T>
T sigma_diag(const Hypergraph& h, const std::vector<T>& x) {
  if (static_cast<int>(x.size()) != h.n) throw std::invalid_argument("vector dimension mismatch");
  T tau(0);
  for (std::size_t ei = 0; ei < h.edges.size(); ++ei) {
    T term(1);
    for (int v : h.edges[ei]) term *= x[v];
    tau += T(h.mult[ei]) * term;
  }
  tau *= T(h.r);
  T s(0);
  for (const T& v : x) s += v;
  T prod(1);
  for (int i = 0; i < h.r; ++i) prod *= s;
  T npow(1);
  for (int i = 0; i < h.r; ++i) npow *= T(h.n);
  return tau - T(h.r) * T(h.edge_count()) * (prod / npow);
}

// Gradient of sigma_H(x,..,x):
//   g(v) = r [ sum_{e containing v} m(e) prod_{u in e, u != v} x(u)
//              - (r e(H) / n^r) (sum_u x(u))^{r-1} ].
inline std::vector<double> sigma_diag_gradient(const Hypergraph& h,
                                               const std::vector<double>& x) {
  std::vector<double> g(h.n, 0.0);
  for (std::size_t ei = 0; ei < h.edges.size(); ++ei) {
    const auto& e = h.edges[ei];
    for (std::size_t i = 0; i < e.size(); ++i) {
      double prod = static_cast<double>(h.mult[ei]);
      for (std::size_t j = 0; j < e.size(); ++j)
        if (j != i) prod *= x[e[j]];
      g[e[i]] += prod;
    }
  }
  double s = 0;
  for (double v : x) s += v;
  double spow = 1;
  for (int i = 0; i < h.r - 1; ++i) spow *= s;
  double npow = 1;
  for (int i = 0; i < h.r; ++i) npow *= h.n;
  double shift = static_cast<double>(h.r) * static_cast<double>(h.edge_count()) / npow * spow;
  for (int v = 0; v < h.n; ++v) g[v] = h.r * (g[v] - shift);
  return g;
}

struct SpectralCertificate {
  enum class Kind { lambda2, mu };
  Kind kind = Kind::lambda2;
  double p = 2.0;
  double value = 0.0;          // sigma for lambda2, |sigma| for mu
  bool value_is_exact = false; // value_rat is meaningful (p == r candidates)
  Rat value_rat;
  std::vector<std::vector<double>> witness;  // one vector, or r equal copies for mu
  std::vector<int> witness_set;              // when the witness is set-derived
  bool witness_signed = false;               // 1_U - 1_{U^c} rather than 1_U
};

namespace detail {

struct CandidateEval {
  Rat sigma_rat;     // sigma on the unnormalized +/-1 or 0/1 vector
  double norm_arg;   // ||y||_p^p of the unnormalized vector (= support size)
  double value;      // sigma / norm_arg^{r/p}
  bool exact;        // r == p so the division is rational
  Rat value_rat;
};

// sigma on the characteristic vector of U (signed: 1_U - 1_{U^c}), exact, then
// scaled by the L^p normalization ||y||_p^r = (support)^{r/p}.
inline CandidateEval eval_set_candidate(const Hypergraph& h, const std::vector<int>& u,
                                        bool is_signed, double p) {
  CandidateEval out;
  std::vector<char> in(h.n, 0);
  for (int v : u) in[v] = 1;
  BigInt tau(0);
  for (std::size_t ei = 0; ei < h.edges.size(); ++ei) {
    long long sign = 1;
    bool zero = false;
    for (int v : h.edges[ei]) {
      if (in[v]) continue;
      if (is_signed)
        sign = -sign;
      else
        zero = true;
    }
    if (!zero) tau += BigInt(h.mult[ei]) * sign;
  }
  tau *= h.r;
  long long support = is_signed ? h.n : static_cast<long long>(u.size());
  long long colsum = is_signed ? 2 * static_cast<long long>(u.size()) - h.n
                               : static_cast<long long>(u.size());
  BigInt shift_num = BigInt(h.r) * BigInt(h.edge_count()) * bigint_pow(BigInt(colsum), h.r);
  out.sigma_rat = Rat(tau) - Rat(shift_num, bigint_pow(BigInt(h.n), h.r));
  out.norm_arg = static_cast<double>(support);
  out.exact = p == static_cast<double>(h.r);
  if (support == 0) {
    out.value = 0;
    out.value_rat = Rat(0);
    out.exact = true;
    return out;
  }
  if (out.exact) {
    out.value_rat = out.sigma_rat / Rat(support);
    out.value = to_double(out.value_rat);
  } else {
    out.value = to_double(out.sigma_rat) /
                std::pow(static_cast<double>(support), static_cast<double>(h.r) / p);
  }
  return out;
}

inline std::vector<double> normalized_set_vector(const Hypergraph& h, const std::vector<int>& u,
                                                 bool is_signed, double p) {
  std::vector<double> y(h.n, is_signed ? -1.0 : 0.0);
  for (int v : u) y[v] = 1.0;
  double norm_p = 0;
  for (double v : y) norm_p += std::pow(std::fabs(v), p);
  double scale = norm_p > 0 ? std::pow(norm_p, -1.0 / p) : 0.0;
  for (double& v : y) v *= scale;
  return y;
}

}  // namespace detail

// Default characteristic candidates: the full set, every singleton, and
// random half-size sets.
inline std::vector<std::vector<int>> default_candidate_sets(const Hypergraph& h,
                                                            std::uint64_t seed,
                                                            int random_half_sets = 32) {
  std::vector<std::vector<int>> out;
  std::vector<int> all(h.n);
  for (int v = 0; v < h.n; ++v) all[v] = v;
  out.push_back(all);
  for (int v = 0; v < h.n; ++v) out.push_back({v});
  Rng rng(splitmix64(seed) ^ 0xca4d1ULL);
  for (int k = 0; k < random_half_sets; ++k)
    out.push_back(rng.sample_subset(h.n, h.n / 2));
  return out;
}

// Lower-bound certificate for lambda_2^(p): the best sigma_H(x,..,x) over
// characteristic-vector candidates. Any normalized vector is admissible, so
// the reported value is a sound lower bound by definition of the supremum.
inline SpectralCertificate lambda2_certificate(const Hypergraph& h, double p,
                                               const std::vector<std::vector<int>>& candidates) {
  if (p < 1) throw std::invalid_argument("p must be at least 1");
  SpectralCertificate best;
  best.kind = SpectralCertificate::Kind::lambda2;
  best.p = p;
  bool have = false;
  for (const auto& u : candidates) {
    if (u.empty()) continue;
    auto ev = detail::eval_set_candidate(h, u, false, p);
    if (!have || ev.value > best.value) {
      have = true;
      best.value = ev.value;
      best.value_is_exact = ev.exact;
      best.value_rat = ev.value_rat;
      best.witness_set = u;
      best.witness_signed = false;
    }
  }
  if (!have) throw std::invalid_argument("no candidates");
  best.witness = {detail::normalized_set_vector(h, best.witness_set, false, p)};
  return best;
}

// Lower-bound certificate for mu^(p): best |sigma| over the same candidates
// plus their signed variants 1_U - 1_{U^c}; mode "dense" adds random
// ceil(n/2)-subsets on top.
inline SpectralCertificate mu_certificate(const Hypergraph& h, double p,
                                          std::vector<std::vector<int>> candidates,
                                          const std::string& mode = "",
                                          std::uint64_t seed = 1) {
  if (p < 1) throw std::invalid_argument("p must be at least 1");
  if (mode == "dense") {
    Rng rng(splitmix64(seed) ^ 0xdeb5eULL);
    for (int k = 0; k < 32; ++k)
      candidates.push_back(rng.sample_subset(h.n, h.n - h.n / 2));
  }
  SpectralCertificate best;
  best.kind = SpectralCertificate::Kind::mu;
  best.p = p;
  bool have = false;
  for (const auto& u : candidates) {
    for (bool is_signed : {false, true}) {
      if (u.empty() && !is_signed) continue;
      auto ev = detail::eval_set_candidate(h, u, is_signed, p);
      double av = std::fabs(ev.value);
      if (!have || av > best.value) {
        have = true;
        best.value = av;
        best.value_is_exact = ev.exact;
        best.value_rat = ev.value_rat < 0 ? -ev.value_rat : ev.value_rat;
        best.witness_set = u;
        best.witness_signed = is_signed;
      }
    }
  }
  if (!have) throw std::invalid_argument("no candidates");
  auto w = detail::normalized_set_vector(h, best.witness_set, best.witness_signed, p);
  best.witness.assign(h.r, w);
  return best;
}

// Exact error term in the characteristic-vector identity
//   r disc(U) - |U|^{r/p} sigma_H(x,..,x) = dn (|U|^r / n^r - C(|U|,r)/C(n,r))
// with dn = r e(H).
inline Rat char_vector_error_term(const Hypergraph& h, long long subset_size) {
  BigInt re = BigInt(h.r) * BigInt(h.edge_count());
  Rat term1 = Rat(re * bigint_pow(BigInt(subset_size), h.r), bigint_pow(BigInt(h.n), h.r));
  Rat term2 = Rat(re * binom_big(subset_size, h.r), binom_big(h.n, h.r));
  return term1 - term2;
}

// Projected ascent on sigma_H(x,..,x) over the unit L^p sphere: Euclidean
// gradient step, renormalize, halve the step on non-improvement. Never
// returns a value below sigma(x0).
inline SpectralCertificate local_ascent(const Hypergraph& h, double p,
                                        const std::vector<double>& x0, int steps = 200,
                                        double step_size = 1e-2) {
  if (p < 1) throw std::invalid_argument("p must be at least 1");
  auto norm_p = [&](const std::vector<double>& x) {
    double s = 0;
    for (double v : x) s += std::pow(std::fabs(v), p);
    return std::pow(s, 1.0 / p);
  };
  if (std::fabs(norm_p(x0) - 1.0) > 1e-8)
    throw std::invalid_argument("starting point must be unit in L^p");

  std::vector<double> x = x0;
  double val = sigma_diag(h, x);
  std::vector<double> best_x = x;
  double best_val = val;
  double eta = step_size;
  for (int it = 0; it < steps && eta > 1e-14; ++it) {
    auto g = sigma_diag_gradient(h, x);
    std::vector<double> cand(h.n);
    for (int v = 0; v < h.n; ++v) cand[v] = x[v] + eta * g[v];
    double nm = norm_p(cand);
    if (!(nm > 0) || !std::isfinite(nm)) break;
    for (double& v : cand) v /= nm;
    double cv = sigma_diag(h, cand);
    if (!std::isfinite(cv)) break;
    if (cv > val) {
      x = std::move(cand);
      val = cv;
      if (val > best_val) {
        best_val = val;
        best_x = x;
      }
    } else {
      eta *= 0.5;
    }
  }
  SpectralCertificate out;
  out.kind = SpectralCertificate::Kind::lambda2;
  out.p = p;
  out.value = best_val;
  out.witness = {best_x};
  return out;
}

}  // namespace hybisect
