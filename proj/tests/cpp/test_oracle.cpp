#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "splinedim/oracle.hpp"

using namespace splinedim;

namespace {

Point pt(std::initializer_list<int> coords) {
  Point p;
  for (int c : coords) p.push_back(Rational(c));
  return p;
}

SimplicialComplex single_triangle() {
  return SimplicialComplex(2, {pt({0, 0}), pt({1, 0}), pt({0, 1})},
                           {Simplex{{0, 1, 2}}});
}

SimplicialComplex two_triangles() {
  return SimplicialComplex(2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})},
                           {Simplex{{0, 1, 2}}, Simplex{{1, 2, 3}}});
}

SimplicialComplex alfeld_t2() {
  return SimplicialComplex(
      2, {pt({0, 0}), pt({3, 0}), pt({0, 3}), pt({1, 1})},
      {Simplex{{0, 1, 3}}, Simplex{{1, 2, 3}}, Simplex{{0, 2, 3}}});
}

long binom(long n, long k) {
  if (n < k || k < 0) return 0;
  long v = 1;
  for (long i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

}  // namespace

TEST_CASE("single simplex has no constraints") {
  auto tri = single_triangle();
  for (auto mode : {SplineMode::affine, SplineMode::cone}) {
    SplineSystem sys = smoothness_system(tri, 1, 3, mode);
    CHECK(sys.constraints.rows() == 0);
    CHECK(spline_dim(tri, 5, 2, mode) == 6);  // binom(4,2)
    CHECK(spline_dim(tri, 1, 3, mode) == 10);
  }
}

TEST_CASE("two triangles, r=1, d=2: rank-5 block on 12 unknowns") {
  auto two = two_triangles();
  SplineSystem sys = smoothness_system(two, 1, 2, SplineMode::affine);
  CHECK(sys.cell_count * sys.block_dim == 12);
  CHECK(rank(sys.constraints) == 5);
  CHECK(spline_dim(two, 1, 2, SplineMode::affine) == 7);
  CHECK(spline_dim(two, 1, 2, SplineMode::cone) == 7);
}

TEST_CASE("below degree r+1 the pieces must agree outright") {
  auto two = two_triangles();
  SplineSystem sys = smoothness_system(two, 2, 1, SplineMode::affine);
  // divisible subspace is zero: one constraint row per basis monomial
  CHECK(sys.constraints.rows() == static_cast<std::size_t>(sys.block_dim));
  CHECK(spline_dim(two, 2, 1, SplineMode::affine) == 3);
}

TEST_CASE("Alfeld split spot value") {
  auto split = alfeld_t2();
  CHECK(spline_dim(split, 1, 3, SplineMode::affine) == 12);
  CHECK(spline_dim(split, 1, 3, SplineMode::cone) == 12);
}

TEST_CASE("oracle agrees with top homology") {
  auto split = alfeld_t2();
  for (int r : {0, 1, 2}) {
    ChainComplexRJ chain = build_chain_complex(split, r);
    for (long d = 0; d <= 4; ++d) {
      auto h = homology_graded_dims(chain, d);
      CHECK(spline_dim(split, r, d, SplineMode::cone) == h[2]);
    }
  }
}

TEST_CASE("mode agreement and monotonicity") {
  auto split = alfeld_t2();
  long previous_d = -1;
  for (long d = 0; d <= 5; ++d) {
    long dim_a = spline_dim(split, 1, d, SplineMode::affine);
    long dim_c = spline_dim(split, 1, d, SplineMode::cone);
    CHECK(dim_a == dim_c);
    CHECK(dim_a >= previous_d);  // nondecreasing in d
    previous_d = dim_a;
    CHECK(dim_a >= binom(d + 2, 2));
    CHECK(dim_a <= 3 * binom(d + 2, 2));
  }
  // nonincreasing in r
  long previous_r = -1;
  for (int r = 3; r >= 0; --r) {
    long dim = spline_dim(split, r, 3, SplineMode::affine);
    if (previous_r >= 0) CHECK(dim >= previous_r);
    previous_r = dim;
  }
}

TEST_CASE("spline basis: size, membership, determinism, nesting") {
  auto split = alfeld_t2();
  auto basis = spline_basis(split, 1, 3, SplineMode::affine);
  CHECK(basis.size() == 12);
  for (const auto& f : basis) {
    CHECK(is_spline(split, 1, f));
  }
  // smoother splines stay splines at lower smoothness
  for (const auto& f : spline_basis(split, 2, 3, SplineMode::affine)) {
    CHECK(is_spline(split, 1, f));
  }
  // deterministic echelonized output
  auto again = spline_basis(split, 1, 3, SplineMode::affine);
  REQUIRE(again.size() == basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    CHECK(again[i].pieces == basis[i].pieces);
  }
  // cone-mode basis members check out too
  for (const auto& f : spline_basis(split, 1, 2, SplineMode::cone)) {
    CHECK(is_spline(split, 1, f));
  }
}

TEST_CASE("global polynomials restrict to splines") {
  auto split = alfeld_t2();
  Poly p = Poly::linear({Rational(2), Rational(-3)}, Rational(1));
  Poly p3 = p * p * p;
  PiecewisePoly f{SplineMode::affine, 3, {p3, p3, p3}};
  CHECK(is_spline(split, 4, f));
}

TEST_CASE("unrelated random pieces are not splines") {
  auto two = two_triangles();
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 5; ++trial) {
    PiecewisePoly f;
    f.mode = SplineMode::affine;
    f.d = 2;
    for (int cell = 0; cell < 2; ++cell) {
      Poly piece(2);
      for (const Monomial& m : monomials_up_to(2, 2)) {
        piece.add_term(m, Rational(coeff(rng)));
      }
      f.pieces.push_back(std::move(piece));
    }
    CHECK_FALSE(is_spline(two, 1, f));
  }
  PiecewisePoly wrong_shape{SplineMode::affine, 2, {Poly(2)}};
  CHECK_THROWS_AS(is_spline(two, 1, wrong_shape), std::invalid_argument);
}

TEST_CASE("smoothness system rejects invalid complexes") {
  SimplicialComplex bad(2,
                        {pt({0, 0}), pt({2, 0}), pt({0, 2}), pt({1, 0}),
                         pt({3, 0}), pt({1, 2})},
                        {Simplex{{0, 1, 2}}, Simplex{{3, 4, 5}}});
  CHECK_THROWS_AS(smoothness_system(bad, 1, 2, SplineMode::affine),
                  std::invalid_argument);
}
