#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "splinedim/linalg.hpp"

using splinedim::QMatrix;
using splinedim::Rational;

namespace {

QMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = Rational(num(rng), den(rng));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(splinedim::parse_rational("3") == Rational(3));
  CHECK(splinedim::parse_rational("-12") == Rational(-12));
  CHECK(splinedim::parse_rational("3/4") == Rational(3, 4));
  CHECK(splinedim::parse_rational("-7/2") == Rational(-7, 2));
  CHECK(splinedim::parse_rational("0.25") == Rational(1, 4));
  CHECK(splinedim::parse_rational("-1.5") == Rational(-3, 2));
  CHECK(splinedim::format_rational(Rational(-3, 2)) == "-3/2");
  CHECK(splinedim::format_rational(Rational(8, 4)) == "2");
  CHECK_THROWS_AS(splinedim::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(splinedim::parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(splinedim::parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(splinedim::parse_rational(""), std::invalid_argument);
}

TEST_CASE("rref on the 3x3 identity") {
  QMatrix id = QMatrix::identity(3);
  auto r = splinedim::rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1, 2});
  CHECK(r.rank == 3);
}

TEST_CASE("rref on the zero matrix") {
  QMatrix z(2, 2);
  auto r = splinedim::rref(z);
  CHECK(r.reduced == z);
  CHECK(r.pivot_cols.empty());
  CHECK(r.rank == 0);
}

TEST_CASE("rref of a rank-1 matrix") {
  auto r = splinedim::rref(from_rows({{1, 2}, {2, 4}}));
  CHECK(r.rank == 1);
  CHECK(r.reduced == from_rows({{1, 2}, {0, 0}}));
}

TEST_CASE("kernel basis examples") {
  CHECK(splinedim::kernel_basis(QMatrix::identity(4)).empty());

  auto k1 = splinedim::kernel_basis(from_rows({{1, 1}}));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0][0] * Rational(-1) == k1[0][1]);

  auto k2 = splinedim::kernel_basis(from_rows({{1, 2}, {2, 4}}));
  REQUIRE(k2.size() == 1);
  // proportional to (-2, 1)
  CHECK(k2[0][0] * Rational(1) == k2[0][1] * Rational(-2));
}

TEST_CASE("row space comparison on power-of-form coefficient rows") {
  // degree-2 monomial basis x^2, xy, y^2
  QMatrix a = from_rows({{1, 0, 0}, {0, 0, 1}, {1, -2, 1}});  // x^2, y^2, (x-y)^2
  QMatrix b = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});   // x^2, xy, y^2
  CHECK(splinedim::row_space_equal(a, b));

  QMatrix c = from_rows({{1, 0, 0}, {0, 0, 1}});  // x^2, y^2
  QMatrix d = from_rows({{1, 0, 0}, {0, 1, 0}});  // x^2, xy
  CHECK_FALSE(splinedim::row_space_equal(c, d));
  CHECK(splinedim::row_space_equal(c, c));

  CHECK_THROWS_AS(splinedim::row_space_equal(c, QMatrix(1, 2)),
                  std::invalid_argument);
}

TEST_CASE("rank-nullity, idempotence and kernel exactness on random matrices") {
  std::mt19937_64 rng(20240517);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    std::size_t rows = dim(rng), cols = dim(rng);
    QMatrix m = random_matrix(rng, rows, cols);

    auto r = splinedim::rref(m);
    CHECK(r.rank == splinedim::rank(m));

    auto kernel = splinedim::kernel_basis(m);
    CHECK(r.rank + kernel.size() == cols);

    // rref is idempotent
    auto r2 = splinedim::rref(r.reduced);
    CHECK(r2.reduced == r.reduced);

    // every kernel vector is annihilated exactly
    for (const auto& v : kernel) {
      for (std::size_t i = 0; i < rows; ++i) {
        Rational dot = 0;
        for (std::size_t j = 0; j < cols; ++j) dot += m(i, j) * v[j];
        CHECK(dot.is_zero());
      }
    }
  }
}

TEST_CASE("row_space_equal is an equivalence relation") {
  std::mt19937_64 rng(987654321);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    std::size_t cols = dim(rng);
    QMatrix a = random_matrix(rng, dim(rng), cols);
    QMatrix b = random_matrix(rng, dim(rng), cols);
    QMatrix c = random_matrix(rng, dim(rng), cols);

    CHECK(splinedim::row_space_equal(a, a));  // reflexive
    bool ab = splinedim::row_space_equal(a, b);
    CHECK(ab == splinedim::row_space_equal(b, a));  // symmetric
    if (ab && splinedim::row_space_equal(b, c)) {   // transitive
      CHECK(splinedim::row_space_equal(a, c));
    }
  }

  // transitivity exercised on matrices built to share a row space
  std::mt19937_64 rng2(13);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix a = random_matrix(rng2, 3, 4);
    // b = a with an extra dependent row; c = scaled rows of a
    QMatrix b(4, 4), c(3, 4);
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t i = 0; i < 3; ++i) b(i, j) = a(i, j);
      b(3, j) = a(0, j) + a(1, j) * 2;
      for (std::size_t i = 0; i < 3; ++i) c(i, j) = a(i, j) * Rational(3, 7);
    }
    CHECK(splinedim::row_space_equal(a, b));
    CHECK(splinedim::row_space_equal(b, c));
    CHECK(splinedim::row_space_equal(a, c));
  }
}

TEST_CASE("solve_unique") {
  QMatrix a = from_rows({{2, 1}, {1, -1}});
  auto x = splinedim::solve_unique(a, {Rational(5), Rational(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(2));
  CHECK((*x)[1] == Rational(1));

  // inconsistent
  QMatrix s = from_rows({{1, 1}, {2, 2}});
  CHECK_FALSE(splinedim::solve_unique(s, {Rational(1), Rational(3)}).has_value());
  // underdetermined
  CHECK_FALSE(splinedim::solve_unique(from_rows({{1, 1}}), {Rational(1)}).has_value());
}
