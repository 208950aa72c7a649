#include <catch2/catch_amalgamated.hpp>

#include "splinedim/oracle.hpp"
#include "splinedim/refine.hpp"

using namespace splinedim;

namespace {

Point pt(std::initializer_list<int> coords) {
  Point p;
  for (int c : coords) p.push_back(Rational(c));
  return p;
}

SimplicialComplex alfeld_t2() { return alfeld(builtin_simplex(2), 0).fine; }

/**
 * Ring around an interior triangle a=(1,0), b=(0,1), c=(-1,-1) in which
 * every edge at a lies on one of three lines (ab, ac, and the x-axis
 * through the origin), every edge at b on one of four lines, every edge at
 * c on one of five. The three through-the-origin lines x=0, y=0, y=x make
 * the spokes of the Alfeld split at w=(0,0) extensions of existing edges.
 */
SimplicialComplex interior_triangle_ring() {
  std::vector<Point> v = {
      pt({1, 0}),    // 0: a
      pt({0, 1}),    // 1: b
      pt({-1, -1}),  // 2: c
      pt({3, 0}),    // 3: A, on the x-axis beyond a
      pt({1, 3}),    // 4: P1, on line(b,c) beyond b
      pt({0, 3}),    // 5: B, on the y-axis beyond b
      pt({-2, 3}),   // 6: P2, on line(a,b) beyond b
      pt({-3, 2}),   // 7: D, on line(b,A) beyond b
      pt({-3, -2}),  // 8: Q1, on line(a,c) beyond c
      pt({-3, -3}),  // 9: C, on y=x beyond c
      pt({-2, -3})   // 10: Q2, on line(b,c) beyond c
  };
  std::vector<Simplex> cells = {
      Simplex{{0, 1, 2}},   // the interior triangle
      Simplex{{0, 1, 3}},   // [a,b,A]
      Simplex{{1, 2, 7}},   // [b,c,D]
      Simplex{{0, 2, 3}},   // [a,c,A]
      Simplex{{1, 3, 4}},   // [b,A,P1]
      Simplex{{1, 4, 5}},   // [b,P1,B]
      Simplex{{1, 5, 6}},   // [b,B,P2]
      Simplex{{1, 6, 7}},   // [b,P2,D]
      Simplex{{2, 7, 8}},   // [c,D,Q1]
      Simplex{{2, 8, 9}},   // [c,Q1,C]
      Simplex{{2, 9, 10}},  // [c,C,Q2]
      Simplex{{2, 10, 3}}   // [c,Q2,A]
  };
  return SimplicialComplex(2, v, cells);
}

Point ratpt(const Rational& x, const Rational& y) { return Point{x, y}; }

}  // namespace

TEST_CASE("builtin simplices") {
  auto t2 = builtin_simplex(2);
  CHECK(t2.vertices() == std::vector<Point>{pt({0, 0}), pt({3, 0}), pt({0, 3})});
  CHECK(barycenter(t2, t2.cells()[0]) == pt({1, 1}));
  CHECK(validate(builtin_simplex(4)).ok());
}

TEST_CASE("Alfeld split") {
  auto rec = alfeld(builtin_simplex(2), 0);
  CHECK(rec.fine.cells().size() == 3);
  CHECK(rec.piece.cells().size() == 3);
  CHECK(rec.fine.interior_faces(0).size() == 1);
  CHECK(validate(rec.fine).ok());
  // the piece boundary is the whole domain boundary here: nothing to check
  CHECK(rec.new_boundary_faces.empty());

  auto rec3 = alfeld(builtin_simplex(3), 0);
  CHECK(rec3.fine.cells().size() == 4);

  CHECK_THROWS_AS(alfeld(builtin_simplex(2), 0, pt({0, 3})), std::invalid_argument);
  CHECK_THROWS_AS(alfeld(builtin_simplex(2), 0, pt({1, 0})), std::invalid_argument);
}

TEST_CASE("replace_cell inside a larger complex records interior news") {
  auto split = alfeld_t2();
  // split one of the three subtriangles again
  auto rec = alfeld(split, 0);
  CHECK(rec.fine.cells().size() == 5);
  // the replaced cell's boundary: two interior edges and one interior vertex
  // remain interior in the fine complex (the third edge is on the boundary)
  CHECK(rec.new_boundary_faces.size() == 3);
}

TEST_CASE("coverage and simplicity failures") {
  auto two = SimplicialComplex(
      2, {pt({0, 0}), pt({2, 0}), pt({0, 2}), pt({2, 2})},
      {Simplex{{0, 1, 2}}, Simplex{{1, 2, 3}}});

  // piece bisecting the shared (interior) edge of cell 0 is not simple
  SimplicialComplex bisect(2, {pt({0, 0}), pt({2, 0}), pt({0, 2}), pt({1, 1})},
                           {Simplex{{0, 1, 3}}, Simplex{{0, 3, 2}}});
  CHECK(covers(two, two.cells()[0], bisect));
  CHECK_FALSE(is_simple(two, 0, bisect));
  CHECK_THROWS_AS(replace_cell(two, 0, bisect), std::invalid_argument);

  // the same piece used on the Alfeld split's boundary-adjacent cell is fine
  // when the bisected edge lies on the domain boundary
  SimplicialComplex one(2, {pt({0, 0}), pt({2, 0}), pt({0, 2})},
                        {Simplex{{0, 1, 2}}});
  CHECK(is_simple(one, 0, bisect));
  CHECK(validate(replace_cell(one, 0, bisect).fine).ok());

  // piece not covering the cell
  SimplicialComplex partial(2, {pt({0, 0}), pt({1, 0}), pt({0, 2})},
                            {Simplex{{0, 1, 2}}});
  CHECK_FALSE(covers(two, two.cells()[0], partial));
  CHECK_THROWS_AS(replace_cell(two, 0, partial), std::invalid_argument);
}

TEST_CASE("facet split counts and default facet points") {
  auto seq = facet_split(builtin_simplex(2));
  CHECK(seq.steps.size() == 4);  // Alfeld + three pyramids
  CHECK(seq.result().cells().size() == 6);
  CHECK(seq.result().interior_faces(0).size() == 1);
  CHECK(seq.result().vertices().size() == 7);
  CHECK(validate(seq.result()).ok());

  // with u the barycenter, each u_i is the barycenter of its facet
  bool found = false;
  Point expected = ratpt(Rational(3, 2), Rational(3, 2));
  for (const Point& p : seq.result().vertices()) {
    if (p == expected) found = true;
  }
  CHECK(found);

  auto seq3 = facet_split(builtin_simplex(3));
  CHECK(seq3.result().cells().size() == 12);
  CHECK(seq3.result().interior_faces(0).size() == 1);
  CHECK(seq3.result().vertices().size() == 9);

  auto partial = facet_split(builtin_simplex(3), std::nullopt, std::set<int>{0});
  CHECK(partial.result().cells().size() == 6);  // 3 intact + pyramid of 3
  CHECK(partial.steps.size() == 2);
}

TEST_CASE("double Alfeld split counts and collinearity") {
  auto seq = double_alfeld(builtin_simplex(2));
  CHECK(seq.result().cells().size() == 9);
  CHECK(seq.result().interior_faces(0).size() == 4);
  CHECK(seq.result().vertices().size() == 7);
  CHECK(validate(seq.result()).ok());

  auto partial = double_alfeld(builtin_simplex(3), std::nullopt, std::set<int>{0});
  CHECK(partial.result().cells().size() == 7);  // 3 intact + 4

  // default u_i: barycenter of [u, F_i] and exactly on line(u, v_i)
  auto t2 = builtin_simplex(2);
  Point u = pt({1, 1});
  Point v0 = pt({0, 0});
  Point expected = barycenter({pt({3, 0}), pt({0, 3}), u});
  Point formula = ratpt((Rational(4) * 1 - 0) / Rational(3), (Rational(4) * 1 - 0) / Rational(3));
  CHECK(expected == formula);
  bool found = false;
  for (const Point& p : seq.result().vertices()) {
    if (p == expected) found = true;
  }
  CHECK(found);

  // custom u_i off the line is rejected
  CHECK_THROWS_AS(double_alfeld(builtin_simplex(2), std::nullopt, std::set<int>{0},
                                {ratpt(Rational(17, 16), Rational(5, 4))}),
                  std::invalid_argument);
  // custom u_i on the line is accepted: v_0=(0,0), u=(1,1), take (5/4, 5/4)
  auto custom = double_alfeld(builtin_simplex(2), std::nullopt, std::set<int>{0},
                              {ratpt(Rational(5, 4), Rational(5, 4))});
  CHECK(custom.result().cells().size() == 5);
}

TEST_CASE("interior triangle ring fixture is a valid complex") {
  auto ring = interior_triangle_ring();
  CHECK(validate(ring).ok());
  // a, b, c are interior vertices
  CHECK(ring.interior_faces(0).size() == 3);
  CHECK(ring.cells().size() == 12);
}

TEST_CASE("split predicate on the aligned subdivision") {
  auto ring = interior_triangle_ring();
  auto rec = alfeld(ring, 0, pt({0, 0}));  // spokes extend existing edges
  REQUIRE(rec.new_boundary_faces.size() == 6);  // 3 vertices + 3 edges
  for (int r : {1, 2, 3}) {
    auto check = is_split(rec, r);
    CHECK(check.split);
    CHECK(check.witnesses.empty());
  }
}

TEST_CASE("split predicate on the generic subdivision") {
  auto ring = interior_triangle_ring();
  auto rec = alfeld(ring, 0, ratpt(Rational(1, 5), Rational(1, 10)));

  // r=1: three distinct slopes at a vertex make the vertex ideal a square
  CHECK(is_split(rec, 1).split);

  // r=2: only a (exactly three slopes) obstructs
  auto c2 = is_split(rec, 2);
  CHECK_FALSE(c2.split);
  REQUIRE(c2.witnesses.size() == 1);
  CHECK(c2.witnesses[0] == std::vector<Point>{pt({1, 0})});

  // r=3: a (three slopes) and b (four slopes) obstruct; c has five
  auto c3 = is_split(rec, 3);
  CHECK_FALSE(c3.split);
  REQUIRE(c3.witnesses.size() == 2);
  CHECK(c3.witnesses[0] == std::vector<Point>{pt({1, 0})});
  CHECK(c3.witnesses[1] == std::vector<Point>{pt({0, 1})});
}

TEST_CASE("additivity of spline dimensions under split subdivisions") {
  // subdividing one cell of A(T_2) is one step of the double Alfeld split
  auto split = alfeld_t2();
  auto rec = alfeld(split, 0);
  for (int r : {0, 1}) {
    auto report = verify_additivity(rec, r, 0, 6);
    CHECK(report.split_ok);
    CHECK(report.hypothesis_ok);
    CHECK(report.ok);
    for (const auto& row : report.rows) {
      CHECK(row.holds);
      CHECK(row.fine_dim == row.coarse_dim + row.piece_dim - row.global_dim);
    }
  }

  // single-simplex coarse complex: the identity reduces to the piece dimension
  auto t2 = builtin_simplex(2);
  auto rec0 = alfeld(t2, 0);
  auto report0 = verify_additivity(rec0, 1, 0, 4);
  CHECK(report0.ok);
  for (const auto& row : report0.rows) {
    CHECK(row.coarse_dim == row.global_dim);
  }
}

TEST_CASE("additivity skips degrees beyond the column budget") {
  auto rec = alfeld(alfeld_t2(), 0);
  auto report = verify_additivity(rec, 1, 0, 8, 60);
  CHECK(report.ok);
  bool some_skipped = false, some_ran = false;
  for (const auto& row : report.rows) {
    (row.skipped ? some_skipped : some_ran) = true;
  }
  CHECK(some_skipped);
  CHECK(some_ran);
}

TEST_CASE("perturbed interior points keep r=1 splits without collinearity") {
  // Alfeld-split a subsimplex of A(T_3) at a generic point off line(u, v_i):
  // the faces of the split see enough facet directions at r=1, but lose the
  // split property at r=2 where collinearity would be required
  auto split3 = alfeld(builtin_simplex(3), 0).fine;
  auto cell_pts = split3.face_points(split3.cells()[0]);
  std::vector<Rational> weights = {Rational(2, 17), Rational(3, 17), Rational(5, 17),
                                   Rational(7, 17)};
  Point p(3, Rational(0));
  for (int i = 0; i < 4; ++i) {
    for (int c = 0; c < 3; ++c) p[c] += weights[i] * cell_pts[i][c];
  }
  auto rec = alfeld(split3, 0, p);
  CHECK(is_split(rec, 1).split);
  CHECK_FALSE(is_split(rec, 2).split);
}
