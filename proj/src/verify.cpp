#include "splinedim/verify.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "splinedim/formulas.hpp"
#include "splinedim/io.hpp"
#include "splinedim/oracle.hpp"
#include "splinedim/refine.hpp"

namespace splinedim {

namespace {

void parallel_run(std::vector<std::function<void()>>& tasks, int jobs) {
  if (jobs <= 0) {
    jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 4;
  }
  jobs = std::min<int>(jobs, static_cast<int>(tasks.size()));
  if (jobs <= 1) {
    for (auto& t : tasks) t();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        tasks[i]();
      }
    });
  }
  for (auto& t : workers) t.join();
}

/** Outcome of one grid cell; failures carry a message. */
struct CellOutcome {
  bool skipped = false;
  bool failed = false;
  std::string message;
};

void fold(CriterionResult& result, const std::vector<CellOutcome>& cells) {
  for (const auto& cell : cells) {
    if (cell.skipped) {
      ++result.skipped;
      continue;
    }
    ++result.checked;
    if (cell.failed) {
      if (result.failures.size() < 8) result.failures.push_back(cell.message);
      if (result.failures.size() == 8) {
        result.failures.push_back("... further failures suppressed");
      }
    }
  }
}

bool within_budget(const VerifyOptions& opts, long cells, int k, long d) {
  if (opts.max_columns <= 0) return true;
  return cells * graded_dim_full(k + 1, d) <= opts.max_columns;
}

Point pt2(long x, long y) { return Point{Rational(x), Rational(y)}; }

/** The interior-triangle ring of the split-predicate example: edges at a lie
 *  on 3 lines, at b on 4, at c on 5, and the lines x=0, y=0, y=x through the
 *  origin make concurrent spoke extensions possible. */
SimplicialComplex interior_triangle_ring() {
  std::vector<Point> v = {pt2(1, 0),   pt2(0, 1),  pt2(-1, -1), pt2(3, 0),
                          pt2(1, 3),   pt2(0, 3),  pt2(-2, 3),  pt2(-3, 2),
                          pt2(-3, -2), pt2(-3, -3), pt2(-2, -3)};
  std::vector<Simplex> cells = {
      Simplex{{0, 1, 2}}, Simplex{{0, 1, 3}}, Simplex{{1, 2, 7}},
      Simplex{{0, 2, 3}}, Simplex{{1, 3, 4}}, Simplex{{1, 4, 5}},
      Simplex{{1, 5, 6}}, Simplex{{1, 6, 7}}, Simplex{{2, 7, 8}},
      Simplex{{2, 8, 9}}, Simplex{{2, 9, 10}}, Simplex{{2, 10, 3}}};
  return SimplicialComplex(2, v, cells);
}

/** Cone over the Alfeld-split triangle, embedded in R^3 with a generic apex. */
SimplicialComplex pyramid_over_alfeld_t2() {
  auto base2 = alfeld(builtin_simplex(2), 0).fine;  // in R^2
  std::vector<Point> vertices;
  for (const Point& p : base2.vertices()) {
    vertices.push_back(Point{p[0], p[1], Rational(0)});
  }
  const int apex = static_cast<int>(vertices.size());
  vertices.push_back(Point{Rational(1), Rational(2), Rational(3)});
  std::vector<Simplex> cells;
  for (const Simplex& c : base2.cells()) {
    Simplex lifted = c;
    lifted.vertices.push_back(apex);
    std::sort(lifted.vertices.begin(), lifted.vertices.end());
    cells.push_back(std::move(lifted));
  }
  return SimplicialComplex(3, std::move(vertices), std::move(cells));
}

SimplicialComplex random_refined_simplex(std::mt19937_64& rng, int k, int steps) {
  SimplicialComplex current = builtin_simplex(k);
  std::uniform_int_distribution<int> weight(1, 5);
  for (int s = 0; s < steps; ++s) {
    std::uniform_int_distribution<std::size_t> pick(0, current.cells().size() - 1);
    std::size_t cell_index = pick(rng);
    auto pts = current.face_points(current.cells()[cell_index]);
    std::vector<Rational> w(pts.size());
    Rational total = 0;
    for (auto& x : w) {
      x = weight(rng);
      total += x;
    }
    Point p(k, Rational(0));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (int c = 0; c < k; ++c) p[c] += w[i] * pts[i][c] / total;
    }
    current = alfeld(current, static_cast<int>(cell_index), p).fine;
  }
  return current;
}

std::string grid_tag(const std::string& name, int k, int r, long d) {
  std::ostringstream out;
  out << name << " k=" << k << " r=" << r << " d=" << d;
  return out.str();
}

// ---------------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------------

CriterionResult criterion1(const VerifyOptions& opts) {
  CriterionResult res{1, "Alfeld dimension formula vs oracle grid", 0, 0, {}, {}};
  struct Cell { int k; int r; long d; };
  std::vector<Cell> grid;
  if (opts.max_k == 0 || opts.max_k >= 2) {
    for (int r = 0; r <= 3; ++r) {
      for (long d = 0; d <= 8; ++d) grid.push_back({2, r, d});
    }
  }
  if (opts.max_k == 0 || opts.max_k >= 3) {
    for (int r = 0; r <= 2; ++r) {
      for (long d = 0; d <= 6; ++d) grid.push_back({3, r, d});
    }
  }
  std::vector<CellOutcome> outcomes(grid.size());
  auto split2 = alfeld(builtin_simplex(2), 0).fine;
  auto split3 = alfeld(builtin_simplex(3), 0).fine;
  std::vector<std::function<void()>> tasks;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    tasks.push_back([&, i]() {
      const auto [k, r, d] = grid[i];
      const SimplicialComplex& mesh = (k == 2) ? split2 : split3;
      long oracle = spline_dim(mesh, r, d);
      long formula = dim_alfeld(k, d, r);
      if (oracle != formula) {
        outcomes[i] = {false, true,
                       grid_tag("A(T_k)", k, r, d) + ": oracle " +
                           std::to_string(oracle) + " != formula " +
                           std::to_string(formula)};
      }
    });
  }
  parallel_run(tasks, opts.jobs);
  fold(res, outcomes);
  return res;
}

CriterionResult criterion2(const VerifyOptions& opts) {
  CriterionResult res{2, "spot dimension values", 0, 0, {}, {}};
  std::vector<CellOutcome> outcomes;
  auto expect = [&](const std::string& what, long actual, long expected) {
    CellOutcome out;
    if (actual != expected) {
      out.failed = true;
      out.message = what + ": got " + std::to_string(actual) + ", expected " +
                    std::to_string(expected);
    }
    outcomes.push_back(out);
  };

  auto split2 = alfeld(builtin_simplex(2), 0).fine;
  expect("dim S^1_3(A(T_2)) oracle", spline_dim(split2, 1, 3), 12);
  expect("dim S^1_3(A(T_2)) formula", dim_alfeld(2, 3, 1), 12);
  for (int k = 2; k <= 4; ++k) {
    if (opts.max_k > 0 && k > opts.max_k) continue;
    auto split = alfeld(builtin_simplex(k), 0).fine;
    expect("dim S^0_1(A(T_" + std::to_string(k) + ")) oracle",
           spline_dim(split, 0, 1), k + 2);
    expect("dim S^0_1(A(T_" + std::to_string(k) + ")) formula",
           dim_alfeld(k, 1, 0), k + 2);
    expect("vertex count of A(T_" + std::to_string(k) + ")",
           static_cast<long>(split.vertices().size()), k + 2);
  }
  auto facet2 = facet_split(builtin_simplex(2)).result();
  expect("dim S^1_2(F(T_2)) oracle", spline_dim(facet2, 1, 2), 9);
  expect("dim S^1_2(F(T_2)) formula", dim_facet(2, 2, 1), 9);
  auto double2 = double_alfeld(builtin_simplex(2)).result();
  expect("dim S^1_3(AA(T_2)) oracle", spline_dim(double2, 1, 3), 18);
  expect("dim S^1_3(AA(T_2)) formula", dim_double_alfeld(2, 3, 1), 18);
  fold(res, outcomes);
  return res;
}

CriterionResult criterion3(const VerifyOptions& opts) {
  CriterionResult res{3, "facet / double-Alfeld formulas vs oracle", 0, 0, {}, {}};
  struct Cell { int k; int r; long d; bool facet; };
  std::vector<Cell> grid;
  if (opts.max_k == 0 || opts.max_k >= 2) {
    for (int r = 0; r <= 2; ++r) {
      for (long d = 0; d <= 7; ++d) {
        grid.push_back({2, r, d, true});
        grid.push_back({2, r, d, false});
      }
    }
  }
  if (opts.max_k == 0 || opts.max_k >= 3) {
    for (int r = 0; r <= 1; ++r) {
      for (long d = 0; d <= 5; ++d) {
        grid.push_back({3, r, d, true});
        grid.push_back({3, r, d, false});
      }
    }
  }
  auto facet2 = facet_split(builtin_simplex(2)).result();
  auto facet3 = facet_split(builtin_simplex(3)).result();
  auto double2 = double_alfeld(builtin_simplex(2)).result();
  auto double3 = double_alfeld(builtin_simplex(3)).result();
  std::vector<CellOutcome> outcomes(grid.size());
  std::vector<std::function<void()>> tasks;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    tasks.push_back([&, i]() {
      const auto [k, r, d, facet] = grid[i];
      const SimplicialComplex& mesh =
          facet ? (k == 2 ? facet2 : facet3) : (k == 2 ? double2 : double3);
      long formula = facet ? dim_facet(k, d, r) : dim_double_alfeld(k, d, r);
      long oracle = spline_dim(mesh, r, d);
      if (oracle != formula) {
        outcomes[i] = {false, true,
                       grid_tag(facet ? "F(T_k)" : "AA(T_k)", k, r, d) +
                           ": oracle " + std::to_string(oracle) +
                           " != formula " + std::to_string(formula)};
      }
    });
  }
  parallel_run(tasks, opts.jobs);
  fold(res, outcomes);
  return res;
}

CriterionResult criterion4(const VerifyOptions& opts) {
  CriterionResult res{4, "pyramid dimensions and summation identity", 0, 0, {}, {}};
  std::vector<CellOutcome> outcomes;
  if (opts.max_k == 0 || opts.max_k >= 3) {
    auto pyramid = pyramid_over_alfeld_t2();
    struct Cell { int r; long d; };
    std::vector<Cell> grid;
    for (int r = 0; r <= 2; ++r) {
      for (long d = 0; d <= 5; ++d) grid.push_back({r, d});
    }
    std::vector<CellOutcome> oracle_outcomes(grid.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      tasks.push_back([&, i]() {
        const auto [r, d] = grid[i];
        long oracle = spline_dim(pyramid, r, d);
        long formula = dim_pyramid(3, d, r);
        if (oracle != formula) {
          oracle_outcomes[i] = {false, true,
                                grid_tag("P_3", 3, r, d) + ": oracle " +
                                    std::to_string(oracle) + " != formula " +
                                    std::to_string(formula)};
        }
      });
    }
    parallel_run(tasks, opts.jobs);
    outcomes.insert(outcomes.end(), oracle_outcomes.begin(), oracle_outcomes.end());
  }
  for (int k = 2; k <= 4; ++k) {
    if (opts.max_k > 0 && k > opts.max_k) continue;
    for (int r = 0; r <= 3; ++r) {
      for (long d = 0; d <= 12; ++d) {
        CellOutcome out;
        if (!pyramid_sum_identity(k, d, r)) {
          out.failed = true;
          out.message = grid_tag("pyramid summation identity", k, r, d);
        }
        outcomes.push_back(out);
      }
    }
  }
  fold(res, outcomes);
  return res;
}

CriterionResult criterion5(const VerifyOptions& opts) {
  CriterionResult res{5, "three-route agreement with homology vanishing", 0, 0, {}, {}};
  struct Fixture { std::string name; SimplicialComplex mesh; };
  std::vector<Fixture> fixtures;
  if (opts.max_k == 0 || opts.max_k >= 2) {
    fixtures.push_back({"A(T_2)", alfeld(builtin_simplex(2), 0).fine});
    fixtures.push_back({"F(T_2)", facet_split(builtin_simplex(2)).result()});
    fixtures.push_back({"AA(T_2)", double_alfeld(builtin_simplex(2)).result()});
  }
  if (opts.max_k == 0 || opts.max_k >= 3) {
    fixtures.push_back({"A(T_3)", alfeld(builtin_simplex(3), 0).fine});
    fixtures.push_back({"F(T_3)", facet_split(builtin_simplex(3)).result()});
    fixtures.push_back({"pyramid", pyramid_over_alfeld_t2()});
  }
  struct Cell { std::size_t fixture; int r; long d; };
  std::vector<Cell> grid;
  for (std::size_t f = 0; f < fixtures.size(); ++f) {
    const int k = fixtures[f].mesh.ambient_dim();
    for (int r = 0; r <= 2; ++r) {
      for (long d = 0; d <= 2L * (r + 1) * (k + 1); ++d) grid.push_back({f, r, d});
    }
  }
  std::vector<CellOutcome> outcomes(grid.size());
  std::vector<std::function<void()>> tasks;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    tasks.push_back([&, i]() {
      const auto [f, r, d] = grid[i];
      const SimplicialComplex& mesh = fixtures[f].mesh;
      const int k = mesh.ambient_dim();
      if (!within_budget(opts, static_cast<long>(mesh.cells().size()), k, d)) {
        outcomes[i].skipped = true;
        return;
      }
      auto h = homology_graded_dims(mesh, r, d);
      std::string tag = grid_tag(fixtures[f].name, k, r, d);
      for (int idx = 0; idx < k; ++idx) {
        if (h[idx] != 0) {
          outcomes[i] = {false, true,
                         tag + ": H_" + std::to_string(idx) + " = " +
                             std::to_string(h[idx]) + " (expected 0)"};
          return;
        }
      }
      long euler = euler_dim(mesh, r, d);
      long affine = spline_dim(mesh, r, d, SplineMode::affine);
      long cone = spline_dim(mesh, r, d, SplineMode::cone);
      if (euler != affine || euler != cone || cone != h[k]) {
        outcomes[i] = {false, true,
                       tag + ": routes disagree (euler " + std::to_string(euler) +
                           ", affine " + std::to_string(affine) + ", cone " +
                           std::to_string(cone) + ", top homology " +
                           std::to_string(h[k]) + ")"};
      }
    });
  }
  parallel_run(tasks, opts.jobs);
  fold(res, outcomes);
  if (res.skipped > 0) {
    res.notes.push_back("grid cells above " + std::to_string(opts.max_columns) +
                        " system columns skipped (raise --budget to attempt)");
  }
  return res;
}

CriterionResult criterion6(const VerifyOptions& opts) {
  CriterionResult res{6, "split predicate on the interior-triangle example", 0, 0, {}, {}};
  if (opts.max_k != 0 && opts.max_k < 2) return res;
  std::vector<CellOutcome> outcomes;
  auto ring = interior_triangle_ring();
  auto aligned = alfeld(ring, 0, pt2(0, 0));
  auto generic = alfeld(ring, 0, Point{Rational(1, 5), Rational(1, 10)});
  auto expect = [&](const std::string& what, bool cond) {
    CellOutcome out;
    if (!cond) {
      out.failed = true;
      out.message = what;
    }
    outcomes.push_back(out);
  };
  for (int r : {1, 2, 3}) {
    auto check = is_split(aligned, r);
    expect("aligned subdivision must be split at r=" + std::to_string(r), check.split);
  }
  expect("generic subdivision must be split at r=1", is_split(generic, 1).split);
  const std::vector<Point> inner = {pt2(1, 0), pt2(0, 1), pt2(-1, -1)};
  for (int r : {2, 3}) {
    auto check = is_split(generic, r);
    expect("generic subdivision must fail at r=" + std::to_string(r), !check.split);
    expect("witnesses at r=" + std::to_string(r) + " must be nonempty",
           !check.witnesses.empty());
    for (const auto& witness : check.witnesses) {
      bool is_inner_vertex =
          witness.size() == 1 &&
          std::find(inner.begin(), inner.end(), witness[0]) != inner.end();
      expect("witness at r=" + std::to_string(r) + " must be an inner vertex",
             is_inner_vertex);
    }
  }
  // the realizable witness sets: {a} at r=2, {a, b} at r=3 (no planar complex
  // can keep all three inner vertices at exactly three edge slopes, so the
  // full vertex triple cannot witness at r=2)
  expect("witness set at r=2 is the three-slope vertex",
         is_split(generic, 2).witnesses.size() == 1);
  expect("witness set at r=3 is the three- and four-slope vertices",
         is_split(generic, 3).witnesses.size() == 2);
  res.notes.push_back(
      "every witness is an inner-triangle vertex; sets are {a} (r=2) and {a,b} (r=3)");
  fold(res, outcomes);
  return res;
}

CriterionResult criterion7(const VerifyOptions& opts) {
  CriterionResult res{7, "dimension additivity along iterated constructions", 0, 0, {}, {}};
  struct Task { std::string name; SubdivisionRecord record; int r; };
  std::vector<Task> work;
  auto add_steps = [&](const std::string& name, const SubdivisionSequence& seq) {
    for (std::size_t s = 0; s < seq.steps.size(); ++s) {
      for (int r = 0; r <= 2; ++r) {
        work.push_back({name + " step " + std::to_string(s), seq.steps[s], r});
      }
    }
  };
  if (opts.max_k == 0 || opts.max_k >= 2) {
    add_steps("F(T_2)", facet_split(builtin_simplex(2)));
    add_steps("AA(T_2)", double_alfeld(builtin_simplex(2)));
  }
  if (opts.max_k == 0 || opts.max_k >= 3) {
    add_steps("F(T_3)", facet_split(builtin_simplex(3)));
    add_steps("AA(T_3)", double_alfeld(builtin_simplex(3)));
  }
  struct StepOutcome { std::vector<CellOutcome> cells; };
  std::vector<StepOutcome> outcomes(work.size());
  std::vector<std::function<void()>> tasks;
  for (std::size_t i = 0; i < work.size(); ++i) {
    tasks.push_back([&, i]() {
      const Task& task = work[i];
      const int k = task.record.fine.ambient_dim();
      const long d_max = 2L * (task.r + 1) * (k + 1);
      auto report = verify_additivity(task.record, task.r, 0, d_max, opts.max_columns);
      std::string tag = task.name + " r=" + std::to_string(task.r);
      if (!report.split_ok) {
        outcomes[i].cells.push_back({false, true, tag + ": step is not split"});
        return;
      }
      if (!report.hypothesis_ok) {
        outcomes[i].cells.push_back(
            {false, true, tag + ": coarse homology hypothesis failed"});
      }
      for (const auto& row : report.rows) {
        CellOutcome out;
        if (row.skipped) {
          out.skipped = true;
        } else if (!row.holds) {
          out.failed = true;
          out.message = tag + " d=" + std::to_string(row.d) + ": " +
                        std::to_string(row.fine_dim) + " != " +
                        std::to_string(row.coarse_dim) + " + " +
                        std::to_string(row.piece_dim) + " - " +
                        std::to_string(row.global_dim);
        }
        outcomes[i].cells.push_back(out);
      }
    });
  }
  parallel_run(tasks, opts.jobs);
  for (const auto& step : outcomes) fold(res, step.cells);
  if (res.skipped > 0) {
    res.notes.push_back("degrees above the column budget skipped per step");
  }
  return res;
}

CriterionResult criterion8(const VerifyOptions& opts) {
  CriterionResult res{8, "partial split dimension formulas", 0, 0, {}, {}};
  struct Cell { int k; std::set<int> subset; bool facet; long d; };
  std::vector<Cell> grid;
  for (int k : {2, 3}) {
    if (opts.max_k > 0 && k > opts.max_k) continue;
    // every proper subset of the k+1 facets
    for (unsigned mask = 0; mask + 1 < (1u << (k + 1)); ++mask) {
      std::set<int> subset;
      for (int i = 0; i <= k; ++i) {
        if (mask & (1u << i)) subset.insert(i);
      }
      for (long d = 0; d <= 6; ++d) {
        grid.push_back({k, subset, true, d});
        grid.push_back({k, subset, false, d});
      }
    }
  }
  // meshes are shared across degrees: build each partial split once
  std::map<std::pair<int, std::pair<bool, unsigned>>, SimplicialComplex> meshes;
  for (const auto& cell : grid) {
    unsigned mask = 0;
    for (int i : cell.subset) mask |= (1u << i);
    auto key = std::make_pair(cell.k, std::make_pair(cell.facet, mask));
    if (!meshes.contains(key)) {
      auto seq = cell.facet
                     ? facet_split(builtin_simplex(cell.k), std::nullopt, cell.subset)
                     : double_alfeld(builtin_simplex(cell.k), std::nullopt, cell.subset);
      meshes.emplace(key, seq.result());
    }
  }
  const int r = 1;
  std::vector<CellOutcome> outcomes(grid.size());
  std::vector<std::function<void()>> tasks;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    tasks.push_back([&, i]() {
      const auto& cell = grid[i];
      unsigned mask = 0;
      for (int j : cell.subset) mask |= (1u << j);
      const auto& mesh =
          meshes.at(std::make_pair(cell.k, std::make_pair(cell.facet, mask)));
      const long s = static_cast<long>(cell.subset.size());
      long expected =
          cell.facet
              ? binom_safe(cell.d + cell.k, cell.k) + A_term(cell.k, cell.d, r) +
                    s * P_term(cell.k, cell.d, r)
              : binom_safe(cell.d + cell.k, cell.k) +
                    (1 + s) * A_term(cell.k, cell.d, r);
      long oracle = spline_dim(mesh, r, cell.d);
      if (oracle != expected) {
        outcomes[i] = {false, true,
                       grid_tag(cell.facet ? "partial facet" : "partial double-Alfeld",
                                cell.k, r, cell.d) +
                           " |S|=" + std::to_string(s) + ": oracle " +
                           std::to_string(oracle) + " != " + std::to_string(expected)};
      }
    });
  }
  parallel_run(tasks, opts.jobs);
  fold(res, outcomes);
  return res;
}

CriterionResult criterion9(const VerifyOptions& opts) {
  CriterionResult res{9, "generator degrees from oracle dimension sequences", 0, 0, {}, {}};
  std::vector<CellOutcome> outcomes;
  auto expect_degrees = [&](const std::string& what, const SimplicialComplex& mesh,
                            int r, int k, const std::map<long, long>& expected) {
    std::vector<long> h;
    for (long d = 0; d <= 8; ++d) h.push_back(spline_dim(mesh, r, d));
    CellOutcome out;
    try {
      auto degrees = infer_generator_degrees(h, k);
      if (degrees != expected) {
        out.failed = true;
        std::ostringstream msg;
        msg << what << ": inferred {";
        for (const auto& [deg, count] : degrees) msg << " " << deg << ":" << count;
        msg << " }";
        out.message = msg.str();
      }
    } catch (const std::exception& e) {
      out.failed = true;
      out.message = what + ": " + e.what();
    }
    outcomes.push_back(out);
  };
  if (opts.max_k == 0 || opts.max_k >= 2) {
    // one generator in degree 0, two in degree 3 (the dimension function is
    // C(d+2,2) + 2 C(d-1,2); the two extra generators appear with the cubics)
    expect_degrees("A(T_2) r=1", alfeld(builtin_simplex(2), 0).fine, 1, 2,
                   {{0, 1}, {3, 2}});
  }
  if (opts.max_k == 0 || opts.max_k >= 3) {
    expect_degrees("pyramid r=1", pyramid_over_alfeld_t2(), 1, 3, {{0, 1}, {3, 2}});
  }
  res.notes.push_back(
      "free-form peeling of the oracle sequence; A(T_2) r=1 gives {0:1, 3:2}");
  fold(res, outcomes);
  return res;
}

CriterionResult criterion10(const VerifyOptions& opts) {
  CriterionResult res{10, "property suites (boundary^2, modes, bases, linalg)", 0, 0, {}, {}};
  std::vector<CellOutcome> outcomes;
  std::vector<SimplicialComplex> complexes;
  if (opts.max_k == 0 || opts.max_k >= 2) {
    complexes.push_back(alfeld(builtin_simplex(2), 0).fine);
    complexes.push_back(facet_split(builtin_simplex(2)).result());
    complexes.push_back(double_alfeld(builtin_simplex(2)).result());
  }
  if (opts.max_k == 0 || opts.max_k >= 3) {
    complexes.push_back(alfeld(builtin_simplex(3), 0).fine);
    complexes.push_back(pyramid_over_alfeld_t2());
  }

  std::mt19937_64 rng(0x5eed0f20);
  std::vector<SimplicialComplex> random_meshes;
  for (int i = 0; i < 14 && (opts.max_k == 0 || opts.max_k >= 2); ++i) {
    random_meshes.push_back(random_refined_simplex(rng, 2, 1 + (i % 3)));
  }
  for (int i = 0; i < 6 && (opts.max_k == 0 || opts.max_k >= 3); ++i) {
    random_meshes.push_back(random_refined_simplex(rng, 3, 1 + (i % 2)));
  }

  struct Task { std::function<CellOutcome()> run; };
  std::vector<std::function<CellOutcome()>> checks;

  // boundary composition vanishes on every constructed complex
  for (const auto& mesh : complexes) {
    for (int r : {0, 1, 2}) {
      checks.push_back([&mesh, r]() {
        CellOutcome out;
        ChainComplexRJ chain = build_chain_complex(mesh, r);
        for (long d = 0; d <= 4; ++d) {
          auto real = realize_chain_degree(chain, d);
          for (std::size_t i = 0; i + 1 < real.boundaries.size(); ++i) {
            if (!(real.boundaries[i] * real.boundaries[i + 1]).is_zero()) {
              out.failed = true;
              out.message = "boundary composition nonzero at d=" + std::to_string(d);
              return out;
            }
          }
        }
        return out;
      });
    }
  }

  // mode agreement on the seeded random meshes
  for (std::size_t m = 0; m < random_meshes.size(); ++m) {
    checks.push_back([&random_meshes, m]() {
      CellOutcome out;
      const auto& mesh = random_meshes[m];
      for (int r : {0, 1, 2}) {
        for (long d = 0; d <= 3; ++d) {
          long affine = spline_dim(mesh, r, d, SplineMode::affine);
          long cone = spline_dim(mesh, r, d, SplineMode::cone);
          if (affine != cone) {
            out.failed = true;
            out.message = "mode disagreement on random mesh " + std::to_string(m) +
                          " r=" + std::to_string(r) + " d=" + std::to_string(d);
            return out;
          }
        }
      }
      return out;
    });
  }

  // spline bases verify against the independent membership checker
  if (opts.max_k == 0 || opts.max_k >= 2) {
    checks.push_back([&complexes]() {
      CellOutcome out;
      const auto& split2 = complexes[0];
      for (auto mode : {SplineMode::affine, SplineMode::cone}) {
        auto basis = spline_basis(split2, 1, 3, mode);
        if (static_cast<long>(basis.size()) != spline_dim(split2, 1, 3, mode)) {
          out.failed = true;
          out.message = "basis size does not match the dimension";
          return out;
        }
        for (const auto& f : basis) {
          if (!is_spline(split2, 1, f)) {
            out.failed = true;
            out.message = "basis element fails the membership checker";
            return out;
          }
        }
      }
      return out;
    });
  }

  // exact linear algebra properties on seeded random matrices
  checks.push_back([]() {
    CellOutcome out;
    std::mt19937_64 rng(20240518);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 30; ++trial) {
      QMatrix m(dim(rng), dim(rng));
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Rational(num(rng), den(rng));
      }
      auto rr = rref(m);
      if (rr.rank != rank(m) ||
          rr.rank + kernel_basis(m).size() != m.cols() ||
          !(rref(rr.reduced).reduced == rr.reduced) || !row_space_equal(m, rr.reduced)) {
        out.failed = true;
        out.message = "linear algebra property failed on trial " + std::to_string(trial);
        return out;
      }
      for (const auto& v : kernel_basis(m)) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
          Rational dot = 0;
          for (std::size_t j = 0; j < m.cols(); ++j) dot += m(i, j) * v[j];
          if (!dot.is_zero()) {
            out.failed = true;
            out.message = "kernel vector not annihilated exactly";
            return out;
          }
        }
      }
    }
    return out;
  });

  outcomes.resize(checks.size());
  std::vector<std::function<void()>> tasks;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    tasks.push_back([&, i]() { outcomes[i] = checks[i](); });
  }
  parallel_run(tasks, opts.jobs);
  fold(res, outcomes);
  return res;
}

}  // namespace

bool VerifyReport::all_passed() const {
  for (const auto& r : results) {
    if (!r.passed()) return false;
  }
  return true;
}

VerifyReport run_paper_suite(const VerifyOptions& options) {
  using CriterionFn = CriterionResult (*)(const VerifyOptions&);
  const std::vector<CriterionFn> fns = {criterion1, criterion2, criterion3,
                                        criterion4, criterion5, criterion6,
                                        criterion7, criterion8, criterion9,
                                        criterion10};
  VerifyReport report;
  for (std::size_t i = 0; i < fns.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!options.criteria.empty() && !options.criteria.contains(id)) continue;
    report.results.push_back(fns[i](options));
  }
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& r : report.results) {
    out << "C" << r.id << "  " << r.label << ": "
        << (r.passed() ? "PASS" : "FAIL") << " (" << r.checked << " checks";
    if (r.skipped > 0) out << ", " << r.skipped << " skipped beyond budget";
    out << ")\n";
    for (const auto& note : r.notes) out << "      note: " << note << "\n";
    for (const auto& failure : r.failures) out << "      FAILED: " << failure << "\n";
  }
  out << (report.all_passed() ? "all criteria passed" : "criteria FAILED") << "\n";
  return out.str();
}

}  // namespace splinedim
