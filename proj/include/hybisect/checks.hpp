#pragma once

#include <string>
#include <vector>

#include "hybisect/disc.hpp"
#include "hybisect/hypergraph.hpp"
#include "hybisect/rng.hpp"

namespace hybisect {

struct SuiteResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Exact identity suites over one instance: split-discrepancy bipartition sum,
// union decomposition, shadow decompositions and density ratios, the
// polynomial identity in the inclusion probability, and the beta-coefficient
// expectation identity. Everything runs in rational arithmetic; any "ok=false"
// is an implementation bug, not noise.
inline std::vector<SuiteResult> run_identity_suites(const Hypergraph& h, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  Rng rng(seed);

  std::vector<int> u = rng.sample_subset(h.n, h.n / 2);
  std::vector<char> in_u(h.n, 0);
  for (int v : u) in_u[v] = 1;
  std::vector<int> comp;
  for (int v = 0; v < h.n; ++v)
    if (!in_u[v]) comp.push_back(v);

  {
    SuiteResult r{"split-bipartition-zero", true, ""};
    Rat total(0);
    for (int i = 0; i <= h.r; ++i) total += split_disc(h, {u, comp}, {i, h.r - i}).value;
    r.ok = total == 0;
    out.push_back(r);
  }
  {
    SuiteResult r{"union-decomposition", true, ""};
    // random disjoint pair carved out of U and its complement
    std::vector<int> a, b;
    for (int v : u)
      if (rng.bernoulli(0.7)) a.push_back(v);
    for (int v : comp)
      if (rng.bernoulli(0.5)) b.push_back(v);
    std::vector<int> both = a;
    both.insert(both.end(), b.begin(), b.end());
    std::sort(both.begin(), both.end());
    Rat rhs(0);
    for (int i = 0; i <= h.r; ++i) rhs += split_disc(h, {a, b}, {i, h.r - i}).value;
    r.ok = disc_of(h, both) == rhs;
    out.push_back(r);
  }
  {
    SuiteResult r{"shadow-decomposition", true, ""};
    for (int t = 2; t <= h.r; ++t) {
      auto rep = shadow_decomposition_check(h, u, t);
      if (!rep.edges_ok || !rep.disc_ok || !rep.density_identity_ok) r.ok = false;
    }
    out.push_back(r);
  }
  {
    SuiteResult r{"shadow-ratios", true, ""};
    auto ps = shadow_densities(h);  // p_2 .. p_r
    for (int t = 2; t < h.r; ++t) {
      Rat lhs = ps[t - 1];
      Rat rhs = ps[t - 2] * Rat(h.r - t, h.n - t);
      if (lhs != rhs) r.ok = false;
    }
    auto win = density_window_check(h);
    if (!win.ok) r.ok = false;
    out.push_back(r);
  }
  {
    SuiteResult r{"poly-identity", true, ""};
    std::vector<int> x, y;
    int mx = std::min(10, h.n / 2);
    for (int i = 0; i < mx && i < static_cast<int>(u.size()); ++i) x.push_back(u[i]);
    for (int i = 0; i < mx && i < static_cast<int>(comp.size()); ++i) y.push_back(comp[i]);
    r.ok = poly_identity_check(h, x, y).ok;
    out.push_back(r);
  }
  {
    SuiteResult r{"beta-identity", true, ""};
    // ground set X^c must stay enumerable
    std::vector<int> x;
    if (h.n > 10) {
      auto keep = rng.sample_subset(h.n, h.n - 10);
      x = keep;
    } else if (h.n > 2) {
      x = rng.sample_subset(h.n, h.n / 3 + 1);
    }
    r.ok = beta_identity_check(h, x).ok;
    out.push_back(r);
  }
  return out;
}

}  // namespace hybisect
