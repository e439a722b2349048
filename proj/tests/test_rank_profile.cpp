#include <catch2/catch_amalgamated.hpp>

#include "exotic/fixtures.hpp"
#include "exotic/rank_profile.hpp"

using namespace exotic;

TEST_CASE("rank grid of the identity parameter") {
  OrbitParam p = parse_param("1234");
  RankProfile rp = rank_profile(p);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      REQUIRE(rp.r[i][j] == std::min(i, j));
      REQUIRE(rp.m[i][j]);  // alpha empty
    }
}

TEST_CASE("membership grid picks up alpha") {
  OrbitParam p = parse_param("[2][1]43");  // (2143, {1,2})
  RankProfile rp = rank_profile(p);
  REQUIRE_FALSE(rp.m[1][0]);  // {1,2} not inside {1}
  REQUIRE(rp.m[2][0]);
  REQUIRE(rp.m[0][2]);  // w{1,2} = {2,1}
  REQUIRE_FALSE(rp.m[0][1]);
}

TEST_CASE("rank grids are monotone with unit steps and full margins") {
  for (int n : {1, 2, 3}) {
    int m = 2 * n;
    for (const auto& p : enumerate_orbit_params(n)) {
      RankProfile rp = rank_profile(p);
      for (int i = 0; i <= m; ++i) REQUIRE(rp.r[m][i] == i);
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) {
          if (i > 0) {
            int di = rp.r[i][j] - rp.r[i - 1][j];
            REQUIRE((di == 0 || di == 1));
            REQUIRE((!rp.m[i - 1][j] || rp.m[i][j]));  // membership monotone in i
          }
          if (j > 0) {
            int dj = rp.r[i][j] - rp.r[i][j - 1];
            REQUIRE((dj == 0 || dj == 1));
            REQUIRE((!rp.m[i][j - 1] || rp.m[i][j]));
          }
        }
    }
  }
}

TEST_CASE("size mismatch is rejected") {
  REQUIRE_THROWS_AS(closure_necessary_leq(parse_param("12"), parse_param("1234")), error);
}

TEST_CASE("necessary closure relation is reflexive and antisymmetric") {
  for (const auto& p : enumerate_orbit_params(2)) REQUIRE(closure_necessary_leq(p, p));
  auto params = enumerate_orbit_params(2);
  for (const auto& a : params)
    for (const auto& b : params)
      if (closure_necessary_leq(a, b) && closure_necessary_leq(b, a)) REQUIRE(a == b);
}

TEST_CASE("flag-only parameters order as the known chain") {
  OrbitParam bottom = parse_param("1234");
  OrbitParam mid = parse_param("2143");
  OrbitParam top = parse_param("3412");
  REQUIRE(closure_necessary_leq(bottom, mid));
  REQUIRE(closure_necessary_leq(mid, top));
  REQUIRE(closure_necessary_leq(bottom, top));
  REQUIRE_FALSE(closure_necessary_leq(mid, bottom));
  REQUIRE_FALSE(closure_necessary_leq(top, mid));
  REQUIRE_FALSE(closure_necessary_leq(top, bottom));
}

TEST_CASE("every reference edge satisfies the necessary condition") {
  HasseFixture fx = hasse_fixture_n2();
  REQUIRE(fx.nodes.size() == 21);
  REQUIRE(fx.edges.size() == 41);
  for (auto [lo, hi] : fx.edges) REQUIRE(closure_necessary_leq(fx.nodes[lo], fx.nodes[hi]));
}

TEST_CASE("reference poset has the known extremes") {
  HasseFixture fx = hasse_fixture_n2();
  OrbitParam top = parse_param("[3][4][1][2]");
  OrbitParam bottom = parse_param("1234");
  REQUIRE(fx.nodes.front() == top);
  REQUIRE(fx.nodes.back() == bottom);
  for (const auto& node : fx.nodes) {
    REQUIRE(closure_necessary_leq(node, top));
    REQUIRE(closure_necessary_leq(bottom, node));
  }
  // uniqueness of the extremes under the necessary relation
  for (const auto& node : fx.nodes) {
    bool dominates_all = true, dominated_by_all = true;
    for (const auto& other : fx.nodes) {
      dominates_all = dominates_all && closure_necessary_leq(other, node);
      dominated_by_all = dominated_by_all && closure_necessary_leq(node, other);
    }
    REQUIRE(dominates_all == (node == top));
    REQUIRE(dominated_by_all == (node == bottom));
  }
}

TEST_CASE("fixture nodes are exactly the 21 parameters") {
  HasseFixture fx = hasse_fixture_n2();
  auto nodes = fx.nodes;
  std::sort(nodes.begin(), nodes.end());
  REQUIRE(nodes == enumerate_orbit_params(2));
}

TEST_CASE("fixture transcription checksum is stable") {
  REQUIRE(hasse_fixture_n2().checksum() == 0x14da5f7b9c710949ULL);
}
