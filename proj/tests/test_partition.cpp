#include <catch2/catch_amalgamated.hpp>

#include "exotic/partition.hpp"

using namespace exotic;

TEST_CASE("partition normalization and indexing") {
  Partition p{3, 2, 2};
  REQUIRE(p.part(1) == 3);
  REQUIRE(p.part(3) == 2);
  REQUIRE(p.part(4) == 0);
  REQUIRE(p.size() == 7);
  REQUIRE(Partition(std::vector<int>{2, 1, 0, 0}) == Partition{2, 1});
  REQUIRE_THROWS_AS(Partition(std::vector<int>{1, 2}), error);
}

TEST_CASE("conjugate") {
  REQUIRE(Partition{4, 2, 1}.conjugate() == Partition{3, 2, 1, 1});
  REQUIRE(Partition{}.conjugate() == Partition{});
  REQUIRE(Partition{2, 2}.conjugate() == Partition{2, 2});
}

TEST_CASE("row sum and multiset union") {
  Partition mu{2, 1};
  Partition nu{1, 1};
  REQUIRE(mu.plus(nu) == Partition{3, 2});
  REQUIRE(mu.union_with(nu) == Partition{2, 1, 1, 1});
  REQUIRE(mu.duplex() == Partition{2, 2, 1, 1});
  REQUIRE(mu.duplex().is_duplex());
  REQUIRE_FALSE(Partition{2, 1, 1}.is_duplex());
  REQUIRE(Partition{2, 2, 1, 1}.duplex_half() == mu);
}

TEST_CASE("alternating sums") {
  REQUIRE(Partition{3, 1, 1}.alternating_sum() == 3);
  REQUIRE(Partition{}.alternating_sum() == 0);
  REQUIRE(Partition{2, 2}.alternating_prefix(1) == 2);
  REQUIRE(Partition{2, 2}.alternating_prefix(2) == 0);
  REQUIRE(Partition{2, 2}.alternating_prefix(5) == 0);
}

TEST_CASE("enumeration of all partitions") {
  REQUIRE(Partition::all(0).size() == 1);
  REQUIRE(Partition::all(4).size() == 5);
  REQUIRE(Partition::all(8).size() == 22);
  auto all5 = Partition::all(5);
  REQUIRE(std::is_sorted(all5.begin(), all5.end()));
}

TEST_CASE("hook length counts") {
  REQUIRE(Partition{4}.tableau_count() == 1);
  REQUIRE(Partition{1, 1, 1, 1}.tableau_count() == 1);
  REQUIRE(Partition{2, 2}.tableau_count() == 2);
  REQUIRE(Partition{2, 1, 1}.tableau_count() == 3);
  REQUIRE(Partition{3, 1}.tableau_count() == 3);
  REQUIRE(Partition{2, 1}.tableau_count() == 2);
  REQUIRE(Partition{4, 3, 2, 1}.tableau_count() == 768);  // classical staircase value
}

TEST_CASE("bipartition enumeration") {
  // sizes: sum over k of p(k) p(total-k)
  REQUIRE(all_bipartitions(2).size() == 5);
  REQUIRE(all_bipartitions(4).size() == 20);
  auto bps = all_bipartitions(4);
  REQUIRE(std::is_sorted(bps.begin(), bps.end()));
}

TEST_CASE("compact strings") {
  REQUIRE(Partition{}.to_string() == "-");
  REQUIRE(Partition{2, 1}.to_string() == "21");
  REQUIRE(Partition{12, 3}.to_string() == "[12]3");
  REQUIRE(Bipartition{{2, 1}, {1}}.to_string() == "(21;1)");
}
