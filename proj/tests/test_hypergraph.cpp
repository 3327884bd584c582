#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <sstream>

#include "hybisect/generators.hpp"
#include "hybisect/hypergraph.hpp"
#include "hybisect/io.hpp"
#include "helpers.hpp"

using namespace hybisect;
using testutil::fano_plane;
using testutil::k4;

TEST_CASE("validate accepts a matching and rejects malformed edges") {
  CHECK_NOTHROW(validate(make_hypergraph(4, 2, {{0, 1}, {2, 3}})));

  Hypergraph bad;
  bad.n = 3;
  bad.r = 3;
  bad.edges = {{0, 1, 1}};
  bad.mult = {1};
  CHECK_THROWS_WITH(validate(bad), Catch::Matchers::ContainsSubstring("repeated vertex"));

  bad.edges = {{0, 1, 3}};
  CHECK_THROWS_WITH(validate(bad), Catch::Matchers::ContainsSubstring("out of range"));

  bad.edges = {{0, 1}};
  CHECK_THROWS_WITH(validate(bad), Catch::Matchers::ContainsSubstring("wrong edge size"));
}

TEST_CASE("degrees, average and maximum") {
  SECTION("complete graph K4") {
    auto h = k4();
    CHECK(degrees(h) == std::vector<long long>{3, 3, 3, 3});
    CHECK(average_degree(h) == Rat(3));
    CHECK(max_degree(h) == 3);
  }
  SECTION("Fano plane: every point on three lines") {
    auto h = fano_plane();
    // independent incidence count
    std::vector<long long> expect(7, 0);
    for (const auto& e : h.edges)
      for (int v : e) expect[v] += 1;
    CHECK(degrees(h) == expect);
    for (long long d : degrees(h)) CHECK(d == 3);
  }
  SECTION("empty hypergraph") {
    auto h = make_hypergraph(5, 2, {});
    CHECK(degrees(h) == std::vector<long long>(5, 0));
    CHECK(h.edge_count() == 0);
  }
}

TEST_CASE("degree sum identity over generated instances") {
  for (const auto& h : testutil::random_instances(12, 6, 16, 42)) {
    long long sum = 0;
    for (long long d : degrees(h)) sum += d;
    CHECK(sum == static_cast<long long>(h.r) * h.edge_count());
  }
}

TEST_CASE("binomial generator") {
  SECTION("p = 0 gives the empty hypergraph") {
    CHECK(gen_random_binomial(10, 3, 0.0, 5).edge_count() == 0);
  }
  SECTION("p = 1 gives the complete hypergraph") {
    auto h = gen_random_binomial(10, 3, 1.0, 5);
    CHECK(h.edge_count() == 120);
    CHECK(h.simple());
  }
  SECTION("edge count concentrates around p * C(n,r)") {
    auto h = gen_random_binomial(30, 3, 0.1, 1);
    double mean = 0.1 * 4060;
    double sigma = std::sqrt(4060 * 0.1 * 0.9);
    CHECK(std::fabs(h.edge_count() - mean) <= 4 * sigma);
  }
  SECTION("r > n rejected") {
    CHECK_THROWS_AS(gen_random_binomial(2, 3, 0.5, 1), std::invalid_argument);
  }
  SECTION("deterministic given seed") {
    CHECK(gen_random_binomial(20, 3, 0.2, 9) == gen_random_binomial(20, 3, 0.2, 9));
  }
}

TEST_CASE("regular generator") {
  SECTION("7 vertices, r=3, d=3") {
    auto h = gen_random_regular(7, 3, 3, 11);
    CHECK(h.edge_count() == 7);
    for (long long d : degrees(h)) CHECK(d == 3);
    CHECK(h.simple());
  }
  SECTION("6 vertices, r=3, d=2") {
    auto h = gen_random_regular(6, 3, 2, 11);
    CHECK(h.edge_count() == 4);
    for (long long d : degrees(h)) CHECK(d == 2);
  }
  SECTION("infeasible parameters") {
    CHECK_THROWS_WITH(gen_random_regular(5, 3, 2, 1),
                      Catch::Matchers::ContainsSubstring("infeasible"));
  }
  SECTION("simple and exactly regular across seeds") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      auto h = gen_random_regular(24, 3, 5, seed);
      CHECK(h.simple());
      for (long long d : degrees(h)) CHECK(d == 5);
      for (const auto& e : h.edges) {
        CHECK(e.size() == 3);
        CHECK(e[0] < e[1]);
        CHECK(e[1] < e[2]);
      }
    }
  }
}

TEST_CASE("shadow multi-hypergraph") {
  SECTION("shadow at t = r is the hypergraph itself") {
    auto h = gen_random_binomial(10, 4, 0.2, 3);
    CHECK(shadow(h, 4) == h);
  }
  SECTION("single edge decomposes into pairs") {
    auto h = make_hypergraph(5, 3, {{0, 1, 2}});
    auto s = shadow(h, 2);
    CHECK(s.edges == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(s.mult == std::vector<long long>{1, 1, 1});
  }
  SECTION("edge count scales by C(r,t) and densities satisfy the ratio identity") {
    for (const auto& h : testutil::random_instances(6, 8, 12, 77)) {
      if (h.r < 3) continue;
      for (int t = 2; t <= h.r; ++t) {
        auto s = shadow(h, t);
        CHECK(s.edge_count() == h.edge_count() * binom_ll(h.r, t));
        CHECK(density(s) == Rat(binom_big(h.n - t, h.r - t)) * density(h));
      }
    }
  }
  SECTION("iterated shadows multiply multiplicities by C(r-s, t-s)") {
    auto h = gen_random_binomial(12, 4, 0.15, 21);
    for (int t = 3; t <= 4; ++t) {
      for (int s = 2; s < t; ++s) {
        auto direct = shadow(h, s);
        auto iterated = shadow(shadow(h, t), s);
        REQUIRE(direct.edges == iterated.edges);
        long long factor = binom_ll(h.r - s, t - s);
        for (std::size_t i = 0; i < direct.mult.size(); ++i)
          CHECK(iterated.mult[i] == factor * direct.mult[i]);
      }
    }
  }
  SECTION("t out of range") {
    auto h = make_hypergraph(5, 3, {{0, 1, 2}});
    CHECK_THROWS_AS(shadow(h, 1), std::invalid_argument);
    CHECK_THROWS_AS(shadow(h, 4), std::invalid_argument);
  }
}

TEST_CASE("text format round trip and parse errors") {
  SECTION("round trip equality") {
    auto h = k4();
    std::ostringstream out;
    write_hypergraph(h, out);
    std::istringstream in(out.str());
    CHECK(read_hypergraph(in) == h);
  }
  SECTION("documented example") {
    std::istringstream in("4 2\n0 1\n2 3\n");
    CHECK(read_hypergraph(in) == make_hypergraph(4, 2, {{0, 1}, {2, 3}}));
  }
  SECTION("comments and multiplicities") {
    std::istringstream in("# header comment\n5 3\n0 1 2 x 4\n2 3 4\n");
    auto h = read_hypergraph(in);
    CHECK(h.edge_count() == 5);
    CHECK(h.mult == std::vector<long long>{4, 1});
  }
  SECTION("wrong edge size reports the line") {
    std::istringstream in("4 2\n0 1 2\n");
    CHECK_THROWS_WITH(read_hypergraph(in), Catch::Matchers::ContainsSubstring(":2"));
  }
  SECTION("vertex out of range reports the line") {
    std::istringstream in("4 2\n0 1\n1 7\n");
    CHECK_THROWS_WITH(read_hypergraph(in), Catch::Matchers::ContainsSubstring(":3"));
  }
  SECTION("mixed round trip") {
    auto m = make_mixed_hypergraph(5, 3, {{0, 1}, {1, 2, 3}}, {2, 1});
    std::ostringstream out;
    write_mixed_hypergraph(m, out);
    std::istringstream in(out.str());
    CHECK(read_mixed_hypergraph(in) == m);
  }
  SECTION("json mirror") {
    auto h = fano_plane();
    CHECK(hypergraph_from_json(hypergraph_to_json(h)) == h);
  }
}

TEST_CASE("multiplicities merge on construction") {
  auto h = make_hypergraph(4, 2, {{1, 0}, {0, 1}, {2, 3}});
  CHECK(h.distinct_edge_count() == 2);
  CHECK(h.mult == std::vector<long long>{2, 1});
  CHECK(h.edge_count() == 3);
}
