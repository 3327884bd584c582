#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hybisect/embedding.hpp"
#include "hybisect/generators.hpp"
#include "helpers.hpp"

using namespace hybisect;

TEST_CASE("single-edge embedding matches the closed form") {
  auto h = make_hypergraph(3, 3, {{0, 1, 2}});
  double alpha = 0.05;
  auto e = build_embedding(h, alpha);
  double s = alpha / std::sqrt(6.0);  // 2 r Delta = 6
  CHECK(e.scale == Catch::Approx(s));
  // x_0 = (1, s, s)
  CHECK(e.xnorm[0] == Catch::Approx(std::sqrt(1 + 2 * s * s)));
  CHECK(e.inner_x(0, 0) == Catch::Approx(1 + 2 * s * s));
  // co-edge pair with the one remaining vertex as common neighbor
  CHECK(e.inner_x(0, 1) == Catch::Approx(2 * s + s * s));
}

TEST_CASE("disjoint edges give orthogonal vectors across components") {
  auto h = make_hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}});
  auto e = build_embedding(h, 0.05);
  CHECK(e.inner_y(0, 3) == 0.0);
  CHECK(e.inner_y(2, 5) == 0.0);
  CHECK(e.inner_y(1, 4) == 0.0);
}

TEST_CASE("pairwise products: diagonal, zeros, and the open upper bound") {
  auto h = gen_random_regular(30, 3, 4, 19);
  auto e = build_embedding(h, 0.05);
  auto vals = pairwise_products(e, {{5, 5}});
  CHECK(vals[0] == Catch::Approx(1.0).margin(1e-12));
  for (int u = 0; u < h.n; ++u)
    for (int v = u + 1; v < h.n; ++v) {
      double y = e.inner_y(u, v);
      CHECK(y >= 0.0);
      CHECK(y < e.alpha);
    }
}

TEST_CASE("embedding invariants on random instances") {
  Rng pick(7);
  for (int i = 0; i < 12; ++i) {
    int r = 2 + static_cast<int>(pick.below(3));
    int n = 20 + static_cast<int>(pick.below(60));
    double denom = to_double(Rat(binom_big(n - 1, r - 1)));
    double p = std::min(1.0, (2.0 + 3.0 * pick.uniform01()) / denom);
    auto h = gen_random_binomial(n, r, p, 100 + i);
    if (max_degree(h) == 0) continue;
    auto e = build_embedding(h, 0.05);
    for (int v = 0; v < n; ++v) {
      double xsq = e.xnorm[v] * e.xnorm[v];
      CHECK(xsq >= 1.0);
      CHECK(xsq <= 2.0);
      CHECK(e.inner_y(v, v) == Catch::Approx(1.0).margin(1e-10));
    }
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        double y = e.inner_y(u, v);
        CHECK(y >= 0.0);
        CHECK(y < e.alpha);
        if (e.adjacent(u, v)) CHECK(y >= e.scale * (1 - 1e-12));
      }
  }
}

TEST_CASE("embedding rejects bad inputs") {
  auto h = testutil::k4();
  CHECK_THROWS_WITH(build_embedding(h, 0.0), Catch::Matchers::ContainsSubstring("alpha"));
  CHECK_THROWS_WITH(build_embedding(h, 0.2), Catch::Matchers::ContainsSubstring("alpha"));
  auto empty = make_hypergraph(5, 2, {});
  CHECK_THROWS_WITH(build_embedding(empty, 0.05),
                    Catch::Matchers::ContainsSubstring("empty hypergraph"));
}

TEST_CASE("pair sum: aggregated route equals the naive double loop exactly") {
  SECTION("perfect matching in closed form") {
    auto h = testutil::perfect_matching(12);
    auto e = build_embedding(h, 0.05);
    Rat agg = pair_sum_aggregated(e);
    CHECK(agg == pair_sum_naive(e));
    // only the 6 matched pairs contribute
    double expect = 6.0 * e.inner_y(0, 1);
    CHECK(to_double(agg) == Catch::Approx(expect).margin(1e-12));
  }
  SECTION("single 3-edge in closed form") {
    auto h = make_hypergraph(3, 3, {{0, 1, 2}});
    auto e = build_embedding(h, 0.05);
    Rat agg = pair_sum_aggregated(e);
    CHECK(agg == pair_sum_naive(e));
    double expect = 3.0 * e.inner_y(0, 1);
    CHECK(to_double(agg) == Catch::Approx(expect).margin(1e-12));
  }
  SECTION("random instances up to n = 50") {
    for (const auto& h : testutil::random_instances(6, 10, 50, 8)) {
      if (max_degree(h) == 0) continue;
      auto e = build_embedding(h, 0.05);
      CHECK(pair_sum_aggregated(e) == pair_sum_naive(e));
    }
  }
}

TEST_CASE("scalar-sum bound report") {
  SECTION("complete graph: both sides computed, inequality direction reported") {
    auto h = testutil::complete_uniform(12, 2);
    auto e = build_embedding(h, 0.05);
    auto rep = scalar_sum_bound_check(e);
    CHECK(to_double(rep.pair_sum) > 0.0);
    CHECK(rep.bound == Catch::Approx(4.0 * 2 * 11 * 0.05 * 0.05 * 12));
    if (rep.delta_large_enough) CHECK(rep.holds);
  }
  SECTION("bound holds in the certified regime") {
    auto h = gen_random_regular(60, 3, 30, 5);
    auto e = build_embedding(h, 0.05);
    auto rep = scalar_sum_bound_check(e);
    if (rep.delta_large_enough) CHECK(rep.holds);
  }
}
