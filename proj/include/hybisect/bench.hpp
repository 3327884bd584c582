#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hybisect/cut.hpp"
#include "hybisect/disc.hpp"
#include "hybisect/generators.hpp"
#include "hybisect/spectral.hpp"

namespace hybisect {

struct BenchRecord {
  int n = 0, r = 0, d = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  long long e = 0;
  long long cross = 0;
  Rat baseline;       // exact random-equipartition expectation
  Rat advantage;      // s(H) against the asymptote
  double c_emp = 0.0; // s(H) / (sqrt(d) n)
  Rat disc_plus_est;
  double lambda2_cert = 0.0;
  double hypertree_ref = 0.0;      // reference line: r/(r-1) ((r-1)(d-1))^{1/r}
  long long oracle_bw_value = -1;  // filled when n <= 20
  double wall_ms = 0.0;            // excluded from the record table
};

struct BenchSummary {
  int n = 0, r = 0;
  double c_min = 0.0, c_median = 0.0;
  int cells = 0;
};

// Grid sweep: d-regular instances per cell, bisected with the best-of-T
// driver; the empirical constant is s(H)/(sqrt(d) n). Cells run in parallel,
// record order is grid order regardless of completion order.
inline std::vector<BenchRecord> bench_sweep(const std::vector<int>& ns,
                                            const std::vector<int>& rs,
                                            const std::vector<int>& ds, int seed_count,
                                            std::uint64_t seed0, long long trials,
                                            double alpha) {
  std::vector<BenchRecord> records;
  for (int n : ns)
    for (int r : rs)
      for (int d : ds)
        for (int s = 0; s < seed_count; ++s) {
          BenchRecord rec;
          rec.n = n;
          rec.r = r;
          rec.d = d;
          rec.seed = seed0 + static_cast<std::uint64_t>(s);
          records.push_back(rec);
        }

  parallel_chunks(records.size(), [&](std::size_t i) {
    BenchRecord& rec = records[i];
    auto t0 = std::chrono::steady_clock::now();
    try {
      Hypergraph h = gen_random_regular(rec.n, rec.r, rec.d, rec.seed);
      rec.e = h.edge_count();
      BisectResult res = bisect(h, trials, alpha, rec.seed, BalanceMode::greedy);
      rec.cross = res.cut.cross;
      rec.baseline = res.expectation_baseline;
      rec.advantage = res.cut.advantage;
      rec.c_emp = to_double(rec.advantage) /
                  (std::sqrt(static_cast<double>(rec.d)) * static_cast<double>(rec.n));
      rec.disc_plus_est = disc_plus_heuristic(h, trials, alpha, rec.seed).value;
      rec.lambda2_cert =
          lambda2_certificate(h, rec.r, default_candidate_sets(h, rec.seed)).value;
      if (rec.d >= 1)
        rec.hypertree_ref = static_cast<double>(rec.r) / (rec.r - 1) *
                            std::pow((rec.r - 1.0) * (rec.d - 1.0), 1.0 / rec.r);
      if (rec.n <= 20) rec.oracle_bw_value = oracle_bw(h).bw;
      rec.ok = true;
    } catch (const std::exception& e) {
      rec.ok = false;
      rec.error = e.what();
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  });
  return records;
}

inline std::vector<BenchSummary> bench_summarize(const std::vector<BenchRecord>& records) {
  std::map<std::pair<int, int>, std::vector<double>> groups;
  for (const auto& rec : records)
    if (rec.ok) groups[{rec.n, rec.r}].push_back(rec.c_emp);
  std::vector<BenchSummary> out;
  for (auto& [key, vals] : groups) {
    std::sort(vals.begin(), vals.end());
    BenchSummary s;
    s.n = key.first;
    s.r = key.second;
    s.cells = static_cast<int>(vals.size());
    s.c_min = vals.front();
    std::size_t mid = vals.size() / 2;
    s.c_median = vals.size() % 2 ? vals[mid] : 0.5 * (vals[mid - 1] + vals[mid]);
    out.push_back(s);
  }
  return out;
}

}  // namespace hybisect
