#include <catch2/catch_amalgamated.hpp>

#include "exotic/bipartition.hpp"
#include "exotic/permutation.hpp"

using namespace exotic;

TEST_CASE("permutation basics") {
  Permutation w({2, 1, 4, 3});
  REQUIRE(w(1) == 2);
  REQUIRE(w.inverse() == w);
  REQUIRE(w.is_fixed_point_free_involution());
  REQUIRE_FALSE(Permutation::identity(4).is_fixed_point_free_involution());
  REQUIRE(Permutation::longest(4).one_line() == std::vector<int>{4, 3, 2, 1});
  REQUIRE_THROWS_AS(Permutation({1, 1}), error);
}

TEST_CASE("fixed point free involutions are counted by double factorials") {
  REQUIRE(fixed_point_free_involutions(2).size() == 1);
  REQUIRE(fixed_point_free_involutions(4).size() == 3);
  REQUIRE(fixed_point_free_involutions(6).size() == 15);
  REQUIRE(fixed_point_free_involutions(8).size() == 105);
}

TEST_CASE("orbit permutations for n = 2 are the known three") {
  auto r4 = orbit_permutations(2);
  REQUIRE(r4.size() == 3);
  REQUIRE(r4[0].one_line() == std::vector<int>{1, 2, 3, 4});
  REQUIRE(r4[1].one_line() == std::vector<int>{2, 1, 4, 3});
  REQUIRE(r4[2].one_line() == std::vector<int>{3, 4, 1, 2});
  for (const auto& w : r4) REQUIRE(is_orbit_permutation(w));
}

TEST_CASE("orbit permutations satisfy the defining condition by brute force") {
  for (int n : {1, 2, 3}) {
    int m = 2 * n;
    // check the characterization against direct filtering of S_m
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i + 1;
    std::size_t direct = 0;
    do {
      if (is_orbit_permutation(Permutation(perm))) ++direct;
    } while (std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(direct == orbit_permutations(n).size());
  }
}

TEST_CASE("w-closed subsets of the identity are the prefixes") {
  auto subsets = w_closed_subsets(Permutation::identity(2));
  REQUIRE(subsets == std::vector<std::uint32_t>{0b00, 0b01, 0b11});
}

TEST_CASE("parameter counts match the closed formula") {
  REQUIRE(enumerate_orbit_params(1).size() == 3);
  REQUIRE(enumerate_orbit_params(2).size() == 21);
  REQUIRE(enumerate_orbit_params(3).size() == 215);
  for (int n : {1, 2, 3}) {
    auto params = enumerate_orbit_params(n);
    REQUIRE(params.size() == orbit_count_formula(n));
    REQUIRE(std::is_sorted(params.begin(), params.end()));
    for (const auto& p : params) REQUIRE(is_valid_orbit_param(p));
  }
}

TEST_CASE("w-closedness is checked against the raw definition") {
  for (const auto& w : orbit_permutations(2)) {
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
      bool direct = true;
      Permutation winv = w.inverse();
      for (int i = 1; i <= 4 && direct; ++i)
        for (int j = 1; j <= 4 && direct; ++j)
          if (i < j && winv(i) < winv(j) && ((mask >> (j - 1)) & 1u) && !((mask >> (i - 1)) & 1u))
            direct = false;
      REQUIRE(is_w_closed(w, mask) == direct);
    }
  }
}

TEST_CASE("grammar round trips") {
  for (int n : {1, 2, 3}) {
    for (const auto& p : enumerate_orbit_params(n)) {
      REQUIRE(parse_param(print_param(p)) == p);
    }
  }
}

TEST_CASE("grammar examples") {
  OrbitParam p = parse_param("[2][1]4[3]");
  REQUIRE(p.w.one_line() == std::vector<int>{2, 1, 4, 3});
  REQUIRE(p.alpha_values() == std::vector<int>{1, 2, 3});
  // bracketed digit runs are accepted on input
  REQUIRE(parse_param("[21]4[3]") == p);
  REQUIRE(print_param(p) == "[2][1]4[3]");
  REQUIRE_THROWS_AS(parse_param("[2]x"), error);
  REQUIRE_THROWS_AS(parse_param("1[2]34"), error);  // not w-closed for w=1234
  REQUIRE_THROWS_AS(parse_param("2134"), error);    // not an orbit permutation
}
