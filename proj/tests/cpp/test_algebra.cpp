#include <catch2/catch_amalgamated.hpp>

#include "splinedim/algebra.hpp"

using namespace splinedim;

namespace {

Point pt(std::initializer_list<int> coords) {
  Point p;
  for (int c : coords) p.push_back(Rational(c));
  return p;
}

Point ptq(std::initializer_list<Rational> coords) { return Point(coords); }

SimplicialComplex two_triangles() {
  return SimplicialComplex(2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})},
                           {Simplex{{0, 1, 2}}, Simplex{{1, 2, 3}}});
}

SimplicialComplex alfeld_t2() {
  return SimplicialComplex(
      2, {pt({0, 0}), pt({3, 0}), pt({0, 3}), pt({1, 1})},
      {Simplex{{0, 1, 3}}, Simplex{{1, 2, 3}}, Simplex{{0, 2, 3}}});
}

// Facet split of (0,0),(3,0),(0,3): barycenter u=(1,1), edge points u_i
// collinear with u and the opposite corner.
SimplicialComplex facet_split_t2() {
  std::vector<Point> v = {
      pt({0, 0}), pt({3, 0}), pt({0, 3}), pt({1, 1}),
      ptq({Rational(3, 2), Rational(3, 2)}),  // 4: on edge 1-2
      ptq({Rational(0), Rational(3, 2)}),     // 5: on edge 0-2
      ptq({Rational(3, 2), Rational(0)})};    // 6: on edge 0-1
  return SimplicialComplex(2, v,
                           {Simplex{{3, 1, 4}}, Simplex{{3, 4, 2}},
                            Simplex{{3, 0, 5}}, Simplex{{3, 5, 2}},
                            Simplex{{3, 0, 6}}, Simplex{{3, 6, 1}}});
}

LinearForm lf(std::initializer_list<int> coeffs) {
  LinearForm l;
  for (int c : coeffs) l.coefficients.push_back(Rational(c));
  return l;
}

/** Independent rank computation of the degree-d piece of a power ideal. */
long ideal_dim_by_rank(const PowerIdeal& ideal, long d, int nvars) {
  auto basis = homogeneous_monomials(nvars, d);
  auto index = basis_index(basis);
  auto multipliers = homogeneous_monomials(nvars, d - ideal.exponent);
  QMatrix rows(ideal.forms.size() * multipliers.size(), basis.size());
  std::size_t row = 0;
  for (const LinearForm& l : ideal.forms) {
    Poly power = form_to_poly(l).pow(static_cast<unsigned>(ideal.exponent));
    for (const Monomial& mu : multipliers) {
      for (const auto& [mono, coeff] : power.terms()) {
        Monomial shifted = mono;
        for (int i = 0; i < nvars; ++i) shifted.exponents[i] += mu.exponents[i];
        rows(row, index.at(shifted)) = coeff;
      }
      ++row;
    }
  }
  return static_cast<long>(rank(rows));
}

}  // namespace

TEST_CASE("homogenization") {
  // y -> y
  LinearForm l1 = homogenize(AffineForm{{Rational(0), Rational(1)}, Rational(0)});
  CHECK(l1.coefficients == std::vector<Rational>{0, 0, 1});

  // x - 1 -> x - x0 up to the canonical scalar
  LinearForm l2 = homogenize(AffineForm{{Rational(1), Rational(0)}, Rational(-1)});
  CHECK(l2.coefficients == std::vector<Rational>{1, -1, 0});

  // x + y - 2: vanishes on lifted points (1, v) with v on the affine line
  AffineForm f{{Rational(1), Rational(1)}, Rational(-2)};
  LinearForm l3 = homogenize(f);
  Poly p = form_to_poly(l3);
  CHECK(p.evaluate({Rational(1), Rational(2), Rational(0)}).is_zero());
  CHECK(p.evaluate({Rational(1), Rational(0), Rational(2)}).is_zero());
  CHECK(p.evaluate({Rational(2), Rational(2), Rational(2)}).is_zero());
  CHECK_FALSE(p.evaluate({Rational(1), Rational(0), Rational(0)}).is_zero());

  CHECK_THROWS_AS(homogenize(AffineForm{{Rational(0), Rational(0)}, Rational(0)}),
                  std::invalid_argument);
}

TEST_CASE("face ideals") {
  auto two = two_triangles();
  Simplex shared{{1, 2}};
  for (int r : {0, 1, 2}) {
    PowerIdeal ideal = face_ideal(two, shared, r);
    CHECK(ideal.forms.size() == 1);
    CHECK(ideal.exponent == r + 1);
  }

  auto split = alfeld_t2();
  PowerIdeal at_u = face_ideal(split, Simplex{{3}}, 1);
  CHECK(at_u.forms.size() == 3);

  // two collinear incident edges contribute a single form after dedup
  SimplicialComplex collinear(2,
                              {pt({0, 0}), pt({1, 0}), pt({2, 0}), pt({1, 2})},
                              {Simplex{{0, 1, 3}}, Simplex{{1, 2, 3}}});
  PowerIdeal at_w = face_ideal(collinear, Simplex{{1}}, 1);
  CHECK(at_w.forms.size() == 2);  // the line y=0 once, plus the edge to (1,2)
}

TEST_CASE("graded dimension of power ideals") {
  // <x^2, y^2> in 3 variables at degree 2
  PowerIdeal j{{lf({0, 1, 0}), lf({0, 0, 1})}, 2};
  CHECK(ideal_graded_dim(j, 2, 3) == 2);
  CHECK(quotient_graded_dim(j, 2, 3) == 4);

  CHECK(ideal_graded_dim(j, 1, 3) == 0);  // below the generator degree
  CHECK(ideal_graded_dim(PowerIdeal{{}, 2}, 5, 3) == 0);

  auto split = alfeld_t2();
  PowerIdeal at_u = face_ideal(split, Simplex{{3}}, 1);
  CHECK(ideal_graded_dim(at_u, 2, 3) == 3);
}

TEST_CASE("single-generator shortcut agrees with the rank computation") {
  std::vector<PowerIdeal> singles = {
      {{lf({0, 1, 0})}, 2},
      {{lf({1, -1, 2})}, 3},
      {{lf({0, 1, -1})}, 1},
      {{lf({1, 0, 0, 2})}, 2},
  };
  for (const auto& ideal : singles) {
    int nvars = ideal.forms[0].nvars();
    for (long d = 0; d <= 7; ++d) {
      if (d < ideal.exponent) continue;
      CHECK(ideal_graded_dim(ideal, d, nvars) == ideal_dim_by_rank(ideal, d, nvars));
    }
  }
}

TEST_CASE("ideal equality by degree-m span") {
  PowerIdeal a{{lf({0, 1, 0}), lf({0, 0, 1}), lf({0, 1, -1})}, 2};
  PowerIdeal b{{lf({0, 1, 0}), lf({0, 0, 1}), lf({0, 1, -1}), lf({0, 1, -2})}, 2};
  CHECK(ideals_equal(a, a));
  CHECK(ideals_equal(a, b));  // three distinct squares already span

  PowerIdeal c{{lf({0, 1, 0}), lf({0, 0, 1}), lf({0, 1, -1})}, 3};
  PowerIdeal d{{lf({0, 1, 0}), lf({0, 0, 1}), lf({0, 1, -1}), lf({0, 1, -2})}, 3};
  CHECK_FALSE(ideals_equal(c, d));  // a fourth distinct cube is independent

  CHECK_THROWS_AS(ideals_equal(a, c), std::invalid_argument);
}

TEST_CASE("chain complex shapes") {
  SimplicialComplex single(2, {pt({0, 0}), pt({1, 0}), pt({0, 1})},
                           {Simplex{{0, 1, 2}}});
  ChainComplexRJ c1 = build_chain_complex(single, 1);
  CHECK(c1.terms[2].size() == 1);
  CHECK(c1.terms[1].empty());
  CHECK(c1.terms[0].empty());

  ChainComplexRJ c2 = build_chain_complex(two_triangles(), 1);
  CHECK(c2.terms[2].size() == 2);
  CHECK(c2.terms[1].size() == 1);
  CHECK(c2.terms[1][0].ideal.forms.size() == 1);
  CHECK(c2.terms[0].empty());

  ChainComplexRJ c3 = build_chain_complex(alfeld_t2(), 1);
  CHECK(c3.terms[2].size() == 3);
  CHECK(c3.terms[1].size() == 3);
  CHECK(c3.terms[0].size() == 1);
  CHECK(c3.terms[0][0].ideal.forms.size() == 3);

  SimplicialComplex degenerate(2, {pt({0, 0}), pt({1, 1}), pt({2, 2})},
                               {Simplex{{0, 1, 2}}});
  CHECK_THROWS_AS(build_chain_complex(degenerate, 1), std::invalid_argument);
}

TEST_CASE("boundary composes to zero") {
  for (int r : {0, 1, 2}) {
    for (const auto& complex : {alfeld_t2(), facet_split_t2()}) {
      ChainComplexRJ chain = build_chain_complex(complex, r);
      for (long d = 0; d <= 5; ++d) {
        auto real = realize_chain_degree(chain, d);
        REQUIRE(real.boundaries.size() == 2);
        if (real.term_dims[0] == 0) continue;
        CHECK((real.boundaries[0] * real.boundaries[1]).is_zero());
      }
    }
  }
}

TEST_CASE("graded homology dimensions") {
  SimplicialComplex single(2, {pt({0, 0}), pt({1, 0}), pt({0, 1})},
                           {Simplex{{0, 1, 2}}});
  for (int r : {0, 1, 3}) {
    for (long d : {0L, 1L, 3L, 5L}) {
      auto h = homology_graded_dims(single, r, d);
      CHECK(h[2] == graded_dim_full(3, d));
      CHECK(h[1] == 0);
      CHECK(h[0] == 0);
    }
  }

  auto h2 = homology_graded_dims(two_triangles(), 1, 2);
  CHECK(h2 == std::vector<long>{0, 0, 7});

  auto h3 = homology_graded_dims(alfeld_t2(), 1, 3);
  CHECK(h3 == std::vector<long>{0, 0, 12});
}

TEST_CASE("euler characteristic dimension") {
  SimplicialComplex single(2, {pt({0, 0}), pt({1, 0}), pt({0, 1})},
                           {Simplex{{0, 1, 2}}});
  for (long d = 0; d <= 6; ++d) {
    CHECK(euler_dim(single, 2, d) == graded_dim_full(3, d));
  }

  CHECK(euler_dim(alfeld_t2(), 1, 3) == 12);  // 30 - 21 + 3
  CHECK(euler_dim(facet_split_t2(), 1, 2) == 9);
}

TEST_CASE("alternating sums match homology alternating sums") {
  for (int r : {0, 1, 2}) {
    for (long d = 0; d <= 5; ++d) {
      for (const auto& complex : {alfeld_t2(), facet_split_t2()}) {
        ChainComplexRJ chain = build_chain_complex(complex, r);
        auto h = homology_graded_dims(chain, d);
        long h_sum = 0;
        for (int i = 0; i <= 2; ++i) h_sum += ((2 - i) % 2 == 0 ? 1 : -1) * h[i];
        CHECK(euler_dim(chain, d) == h_sum);
      }
    }
  }
}

TEST_CASE("facet split fixture face counts") {
  auto f = facet_split_t2();
  CHECK(validate(f).ok());
  CHECK(f.cells().size() == 6);
  CHECK(f.faces(2).size() == 6);
  CHECK(f.interior_faces(0).size() == 1);
  CHECK(f.vertices().size() == 7);
  CHECK(f.interior_faces(1).size() == 6);
  CHECK(f.boundary_facets().size() == 6);
}
