#include <catch2/catch_amalgamated.hpp>

#include "exotic/matrix.hpp"

using namespace exotic;

namespace {
const PrimeField kF7(7);
}

TEST_CASE("rank of identity and zero") {
  REQUIRE(Matrix::identity(kF7, 3).rank() == 3);
  REQUIRE(Matrix(kF7, 4, 4).rank() == 0);
}

TEST_CASE("rank of a dependent 2x2 over F_7") {
  // hand row-reduction: second row is twice the first
  Matrix m = Matrix::from_rows(kF7, {{1, 2}, {2, 4}});
  REQUIRE(m.rank() == 1);
}

TEST_CASE("rank inequalities on random matrices") {
  PrimeField f;
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = Matrix::random(f, 4, 5, rng);
    Matrix b = Matrix::random(f, 5, 3, rng);
    REQUIRE((a * b).rank() <= std::min(a.rank(), b.rank()));
    REQUIRE(a.rank() == a.transpose().rank());
  }
  // rank-deficient products too
  Matrix a = Matrix::from_rows(f, {{1, 0}, {0, 0}});
  Matrix b = Matrix::from_rows(f, {{0, 0}, {0, 1}});
  REQUIRE((a * b).rank() == 0);
}

TEST_CASE("kernel vectors are annihilated") {
  PrimeField f;
  SplitMix64 rng(3);
  Matrix a = Matrix::random(f, 3, 6, rng);
  Matrix k = a.kernel();
  REQUIRE(k.rows() + a.rank() == 6);
  for (std::size_t r = 0; r < k.rows(); ++r) REQUIRE(is_zero_vec(a.apply(k.row(r))));
}

TEST_CASE("inverse round-trip and singular detection") {
  PrimeField f;
  SplitMix64 rng(9);
  Matrix a = Matrix::random(f, 5, 5, rng);
  REQUIRE(a.rank() == 5);  // overwhelmingly likely over a 61-bit field
  REQUIRE(a * a.inverse() == Matrix::identity(f, 5));
  Matrix s = Matrix::from_rows(kF7, {{1, 2}, {2, 4}});
  REQUIRE_THROWS_AS(s.inverse(), error);
}

TEST_CASE("reduce produces reduced echelon form") {
  Matrix m = Matrix::from_rows(kF7, {{0, 2, 4}, {1, 1, 1}, {1, 3, 5}});
  auto pivots = m.reduce();
  REQUIRE(pivots == std::vector<std::size_t>{0, 1});
  REQUIRE(m(0, 0) == 1);
  REQUIRE(m(0, 1) == 0);
  REQUIRE(m(1, 1) == 1);
  for (std::size_t j = 0; j < 3; ++j) REQUIRE(m(2, j) == 0);
}
