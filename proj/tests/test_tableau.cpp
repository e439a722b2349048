#include <catch2/catch_amalgamated.hpp>

#include "exotic/tableau.hpp"

using namespace exotic;

TEST_CASE("single row and single column") {
  auto rows = enumerate_tableaux(Partition{4});
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].descent_set().empty());
  auto cols = enumerate_tableaux(Partition{1, 1, 1, 1});
  REQUIRE(cols.size() == 1);
  REQUIRE(cols[0].descent_set() == std::set<int>{1, 2, 3});
}

TEST_CASE("shape 2,2 has two tableaux with the known descent sets") {
  auto ts = enumerate_tableaux(Partition{2, 2});
  REQUIRE(ts.size() == 2);
  std::set<std::set<int>> descents;
  for (const auto& t : ts) descents.insert(t.descent_set());
  REQUIRE(descents == std::set<std::set<int>>{{2}, {1, 3}});
}

TEST_CASE("shape 2,1,1 has three tableaux with the known descent sets") {
  auto ts = enumerate_tableaux(Partition{2, 1, 1});
  REQUIRE(ts.size() == 3);
  std::set<std::set<int>> descents;
  for (const auto& t : ts) descents.insert(t.descent_set());
  REQUIRE(descents == std::set<std::set<int>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("enumeration count matches the hook length formula") {
  for (int n : {3, 4, 5, 6, 7, 8}) {
    for (const auto& shape : Partition::all(n)) {
      REQUIRE(enumerate_tableaux(shape).size() == shape.tableau_count());
    }
  }
}

TEST_CASE("descent sets determine tableaux of size up to 4") {
  for (int n : {1, 2, 3, 4}) {
    for (const auto& shape : Partition::all(n)) {
      std::set<std::set<int>> descents;
      auto ts = enumerate_tableaux(shape);
      for (const auto& t : ts) descents.insert(t.descent_set());
      REQUIRE(descents.size() == ts.size());
    }
  }
}

TEST_CASE("row words round-trip") {
  for (const auto& t : enumerate_tableaux(Partition{3, 2, 1})) {
    REQUIRE(StandardTableau::from_row_word(t.row_word()) == t);
  }
}

TEST_CASE("chain validation") {
  REQUIRE_THROWS_AS(StandardTableau::from_chain({Partition{1}}), error);
  REQUIRE_THROWS_AS(StandardTableau::from_chain({Partition{}, Partition{2}}), error);
  auto t = StandardTableau::from_chain({Partition{}, Partition{1}, Partition{1, 1}, Partition{2, 1}});
  REQUIRE(t.shape() == Partition{2, 1});
  REQUIRE(t.row_word() == std::vector<int>{1, 2, 1});
  REQUIRE(t.rows() == std::vector<std::vector<int>>{{1, 3}, {2}});
  REQUIRE(t.to_string() == "13/2");
}
