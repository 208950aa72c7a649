#include "splinedim/refine.hpp"

#include <algorithm>
#include <stdexcept>

#include "splinedim/oracle.hpp"

namespace splinedim {

SimplicialComplex builtin_simplex(int k) {
  if (k < 1) throw std::invalid_argument("simplex dimension must be at least 1");
  std::vector<Point> vertices;
  vertices.push_back(Point(k, Rational(0)));
  for (int i = 0; i < k; ++i) {
    Point p(k, Rational(0));
    p[i] = k + 1;
    vertices.push_back(std::move(p));
  }
  std::vector<int> ids(k + 1);
  for (int i = 0; i <= k; ++i) ids[i] = i;
  return SimplicialComplex(k, std::move(vertices), {Simplex{ids}});
}

bool covers(const SimplicialComplex& complex, const Simplex& cell,
            const SimplicialComplex& piece) {
  if (piece.ambient_dim() != complex.ambient_dim()) return false;
  if (!validate(piece).ok()) return false;
  std::vector<Point> cell_points = complex.face_points(cell);
  for (const Point& v : piece.vertices()) {
    if (!point_in_simplex(v, cell_points)) return false;
  }
  Rational total = 0;
  for (const Simplex& c : piece.cells()) {
    total += scaled_volume(piece.face_points(c));
  }
  return total == scaled_volume(cell_points);
}

namespace {

bool contained_in_any_boundary_facet(const std::vector<Point>& face_points,
                                     const SimplicialComplex& complex) {
  for (const Simplex& b : complex.boundary_facets()) {
    if (geometric_contains_points(complex.face_points(b), face_points)) return true;
  }
  return false;
}

/** Faces of the piece lying in its own boundary, all dimensions < k. */
std::vector<std::vector<Point>> piece_boundary_faces(const SimplicialComplex& piece) {
  std::vector<std::vector<Point>> out;
  for (int i = 0; i < piece.ambient_dim(); ++i) {
    std::set<Simplex> interior(piece.interior_faces(i).begin(),
                               piece.interior_faces(i).end());
    for (const Simplex& f : piece.faces(i)) {
      if (!interior.contains(f)) out.push_back(piece.face_points(f));
    }
  }
  return out;
}

bool face_spanned_by(const std::vector<Point>& face_points,
                     const std::vector<Point>& simplex_points) {
  for (const Point& p : face_points) {
    if (std::find(simplex_points.begin(), simplex_points.end(), p) ==
        simplex_points.end()) {
      return false;
    }
  }
  return true;
}

void enumerate_proper_subsets(const std::vector<Point>& points,
                              std::vector<std::vector<Point>>& out) {
  const std::size_t n = points.size();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<Point> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) subset.push_back(points[i]);
    }
    out.push_back(std::move(subset));
  }
}

int find_cell_by_points(const SimplicialComplex& complex,
                        std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  for (std::size_t c = 0; c < complex.cells().size(); ++c) {
    std::vector<Point> cell_points = complex.face_points(complex.cells()[c]);
    std::sort(cell_points.begin(), cell_points.end());
    if (cell_points == points) return static_cast<int>(c);
  }
  throw std::invalid_argument("expected cell is missing from the complex");
}

}  // namespace

bool is_simple(const SimplicialComplex& complex, int cell_index,
               const SimplicialComplex& piece) {
  const Simplex& cell = complex.cells().at(cell_index);
  if (!covers(complex, cell, piece)) {
    throw std::invalid_argument("piece does not cover the cell");
  }
  std::vector<Point> cell_points = complex.face_points(cell);

  // piece boundary faces that are not faces of the cell must lie in the
  // domain boundary
  for (const auto& face_points : piece_boundary_faces(piece)) {
    if (face_spanned_by(face_points, cell_points)) continue;
    if (!contained_in_any_boundary_facet(face_points, complex)) return false;
  }

  // and conversely for cell faces no longer present in the piece
  std::set<std::vector<Point>> piece_faces;
  for (int i = 0; i < piece.ambient_dim(); ++i) {
    for (const Simplex& f : piece.faces(i)) {
      std::vector<Point> pts = piece.face_points(f);
      std::sort(pts.begin(), pts.end());
      piece_faces.insert(std::move(pts));
    }
  }
  std::vector<std::vector<Point>> cell_faces;
  enumerate_proper_subsets(cell_points, cell_faces);
  for (auto& face_points : cell_faces) {
    std::vector<Point> sorted = face_points;
    std::sort(sorted.begin(), sorted.end());
    if (piece_faces.contains(sorted)) continue;
    if (!contained_in_any_boundary_facet(face_points, complex)) return false;
  }
  return true;
}

SubdivisionRecord replace_cell(const SimplicialComplex& complex, int cell_index,
                               const SimplicialComplex& piece) {
  const Simplex cell = complex.cells().at(cell_index);
  if (!covers(complex, cell, piece)) {
    throw std::invalid_argument("piece does not cover the cell");
  }
  if (!is_simple(complex, cell_index, piece)) {
    throw std::invalid_argument(
        "subdivision is not simple: the piece modifies the boundary of the "
        "cell away from the domain boundary");
  }

  std::vector<Point> vertices = complex.vertices();
  const int offset = static_cast<int>(vertices.size());
  vertices.insert(vertices.end(), piece.vertices().begin(), piece.vertices().end());
  std::vector<Simplex> cells;
  for (std::size_t c = 0; c < complex.cells().size(); ++c) {
    if (static_cast<int>(c) != cell_index) cells.push_back(complex.cells()[c]);
  }
  for (const Simplex& c : piece.cells()) {
    Simplex shifted = c;
    for (int& v : shifted.vertices) v += offset;
    cells.push_back(std::move(shifted));
  }
  SimplicialComplex fine(complex.ambient_dim(), std::move(vertices), std::move(cells));
  ValidationReport report = validate(fine);
  if (!report.ok()) {
    throw std::invalid_argument("replacement produced an invalid complex: " +
                                report.violations.front());
  }

  SubdivisionRecord record{complex, cell, piece, std::move(fine), {}};
  for (const auto& face_points : piece_boundary_faces(piece)) {
    if (!contained_in_any_boundary_facet(face_points, record.fine)) {
      record.new_boundary_faces.push_back(face_points);
    }
  }
  return record;
}

SubdivisionRecord alfeld(const SimplicialComplex& complex, int cell_index,
                         const std::optional<Point>& u) {
  const Simplex& cell = complex.cells().at(cell_index);
  std::vector<Point> cell_points = complex.face_points(cell);
  Point center = u.value_or(barycenter(cell_points));
  if (!point_strictly_inside(center, cell_points)) {
    throw std::invalid_argument("interior point is not strictly inside the cell");
  }
  const int k = complex.ambient_dim();
  std::vector<Point> vertices = cell_points;
  vertices.push_back(center);
  std::vector<Simplex> cells;
  for (int j = 0; j <= k; ++j) {
    std::vector<int> ids = {k + 1};  // the new interior vertex
    for (int t = 0; t <= k; ++t) {
      if (t != j) ids.push_back(t);
    }
    std::sort(ids.begin(), ids.end());
    cells.push_back(Simplex{ids});
  }
  SimplicialComplex piece(k, std::move(vertices), std::move(cells));
  return replace_cell(complex, cell_index, piece);
}

namespace {

void check_full_split_counts(const SimplicialComplex& result, int k,
                             std::size_t expect_cells, std::size_t expect_interior,
                             std::size_t expect_boundary) {
  const std::size_t interior = result.interior_faces(0).size();
  const std::size_t boundary = result.vertices().size() - interior;
  if (result.cells().size() != expect_cells || interior != expect_interior ||
      boundary != expect_boundary) {
    throw std::logic_error("split construction produced unexpected counts for k=" +
                           std::to_string(k));
  }
}

std::set<int> full_subset(int k) {
  std::set<int> s;
  for (int i = 0; i <= k; ++i) s.insert(i);
  return s;
}

}  // namespace

SubdivisionSequence facet_split(const SimplicialComplex& single_cell,
                                const std::optional<Point>& u,
                                const std::optional<std::set<int>>& subset) {
  if (single_cell.cells().size() != 1) {
    throw std::invalid_argument("facet split expects a single-cell complex");
  }
  const int k = single_cell.ambient_dim();
  if (k < 2) {
    throw std::invalid_argument("facet split needs ambient dimension at least 2");
  }
  std::vector<Point> corners = single_cell.face_points(single_cell.cells()[0]);
  Point center = u.value_or(barycenter(corners));
  std::set<int> selected = subset.value_or(full_subset(k));

  SubdivisionSequence seq;
  seq.steps.push_back(alfeld(single_cell, 0, center));

  for (int i : selected) {
    if (i < 0 || i > k) throw std::invalid_argument("facet index out of range");
    // facet of the original simplex opposite corner i
    std::vector<Point> facet_points;
    for (int t = 0; t <= k; ++t) {
      if (t != i) facet_points.push_back(corners[t]);
    }
    Point ui = line_hyperplane_intersection(corners[i], center, facet_points);
    if (!point_strictly_inside(ui, facet_points)) {
      throw std::invalid_argument("facet point u_" + std::to_string(i) +
                                  " is not strictly interior to its facet");
    }
    // pyramid: cone from the interior point over the Alfeld split of the facet
    std::vector<Point> vertices = facet_points;
    vertices.push_back(center);  // index k
    vertices.push_back(ui);      // index k+1
    std::vector<Simplex> cells;
    for (int j = 0; j < k; ++j) {
      std::vector<int> ids = {k, k + 1};
      for (int t = 0; t < k; ++t) {
        if (t != j) ids.push_back(t);
      }
      std::sort(ids.begin(), ids.end());
      cells.push_back(Simplex{ids});
    }
    SimplicialComplex pyramid(k, std::move(vertices), std::move(cells));

    std::vector<Point> target = facet_points;
    target.push_back(center);
    const SimplicialComplex& current = seq.result();
    int cell_index = find_cell_by_points(current, target);
    seq.steps.push_back(replace_cell(current, cell_index, pyramid));
  }

  if (selected.size() == static_cast<std::size_t>(k) + 1) {
    check_full_split_counts(seq.result(), k, static_cast<std::size_t>(k) * (k + 1),
                            1, 2 * static_cast<std::size_t>(k) + 2);
  }
  return seq;
}

SubdivisionSequence double_alfeld(const SimplicialComplex& single_cell,
                                  const std::optional<Point>& u,
                                  const std::optional<std::set<int>>& subset,
                                  const std::vector<std::optional<Point>>& custom_ui) {
  if (single_cell.cells().size() != 1) {
    throw std::invalid_argument("double Alfeld split expects a single-cell complex");
  }
  const int k = single_cell.ambient_dim();
  std::vector<Point> corners = single_cell.face_points(single_cell.cells()[0]);
  Point center = u.value_or(barycenter(corners));
  std::set<int> selected = subset.value_or(full_subset(k));

  SubdivisionSequence seq;
  seq.steps.push_back(alfeld(single_cell, 0, center));

  for (int i : selected) {
    if (i < 0 || i > k) throw std::invalid_argument("facet index out of range");
    std::vector<Point> sub_points;  // [u, F_i]
    for (int t = 0; t <= k; ++t) {
      if (t != i) sub_points.push_back(corners[t]);
    }
    sub_points.push_back(center);

    Point ui;
    if (static_cast<int>(custom_ui.size()) > i && custom_ui[i]) {
      ui = *custom_ui[i];
      // exact collinearity with u and the opposite corner
      QMatrix dirs(2, k);
      for (int c = 0; c < k; ++c) {
        dirs(0, c) = ui[c] - center[c];
        dirs(1, c) = corners[i][c] - center[c];
      }
      if (rank(dirs) != 1) {
        throw std::invalid_argument("custom point u_" + std::to_string(i) +
                                    " is not collinear with u and the opposite corner");
      }
    } else {
      // ((k+2) u - v_i)/(k+1): on line(u, v_i); the barycenter of [u, F_i]
      // when u is the barycenter of the simplex
      ui = Point(k);
      for (int c = 0; c < k; ++c) {
        ui[c] = (Rational(k + 2) * center[c] - corners[i][c]) / Rational(k + 1);
      }
    }
    if (!point_strictly_inside(ui, sub_points)) {
      throw std::invalid_argument("point u_" + std::to_string(i) +
                                  " is not strictly interior to its subsimplex");
    }

    std::vector<Point> vertices = sub_points;
    vertices.push_back(ui);  // index k+1
    std::vector<Simplex> cells;
    for (int j = 0; j <= k; ++j) {
      std::vector<int> ids = {k + 1};
      for (int t = 0; t <= k; ++t) {
        if (t != j) ids.push_back(t);
      }
      std::sort(ids.begin(), ids.end());
      cells.push_back(Simplex{ids});
    }
    SimplicialComplex piece(k, std::move(vertices), std::move(cells));

    const SimplicialComplex& current = seq.result();
    int cell_index = find_cell_by_points(current, sub_points);
    seq.steps.push_back(replace_cell(current, cell_index, piece));
  }

  if (selected.size() == static_cast<std::size_t>(k) + 1) {
    check_full_split_counts(seq.result(), k,
                            static_cast<std::size_t>(k + 1) * (k + 1),
                            static_cast<std::size_t>(k) + 2,
                            static_cast<std::size_t>(k) + 1);
  }
  return seq;
}

SplitCheck is_split(const SubdivisionRecord& record, int r) {
  SplitCheck check;
  for (const auto& face_points : record.new_boundary_faces) {
    PowerIdeal fine_ideal = face_ideal(record.fine, face_points, r);
    PowerIdeal coarse_ideal = face_ideal(record.coarse, face_points, r);
    if (!ideals_equal(fine_ideal, coarse_ideal)) {
      check.split = false;
      check.witnesses.push_back(face_points);
    }
  }
  return check;
}

AdditivityReport verify_additivity(const SubdivisionRecord& record, int r,
                                   long d_min, long d_max, long max_columns) {
  AdditivityReport report;
  SplitCheck check = is_split(record, r);
  report.split_ok = check.split;
  if (!check.split) {
    report.notes.push_back("subdivision is not split for r=" + std::to_string(r) +
                           " (" + std::to_string(check.witnesses.size()) +
                           " witness faces); additivity is not expected to hold");
    report.ok = false;
    return report;
  }

  const int k = record.fine.ambient_dim();
  ChainComplexRJ coarse_chain = build_chain_complex(record.coarse, r);
  const long cells_fine = static_cast<long>(record.fine.cells().size());
  const long cells_coarse = static_cast<long>(record.coarse.cells().size());
  const long cells_piece = static_cast<long>(record.piece.cells().size());

  bool all_hold = true;
  for (long d = d_min; d <= d_max; ++d) {
    AdditivityReport::Row row{};
    row.d = d;
    row.global_dim = graded_dim_full(k + 1, d);
    const long widest = std::max({cells_fine, cells_coarse, cells_piece}) * row.global_dim;
    if (max_columns > 0 && widest > max_columns) {
      row.skipped = true;
      row.holds = false;
      report.rows.push_back(row);
      continue;
    }
    auto h = homology_graded_dims(coarse_chain, d);
    if (h[k - 1] != 0) {
      report.hypothesis_ok = false;
      report.notes.push_back("H_(k-1) of the coarse complex is nonzero in degree " +
                             std::to_string(d));
    }
    row.fine_dim = spline_dim(record.fine, r, d);
    row.coarse_dim = spline_dim(record.coarse, r, d);
    row.piece_dim = spline_dim(record.piece, r, d);
    row.holds = (row.fine_dim == row.coarse_dim + row.piece_dim - row.global_dim);
    if (!row.holds) all_hold = false;
    report.rows.push_back(row);
  }
  report.ok = report.split_ok && report.hypothesis_ok && all_hold;
  return report;
}

}  // namespace splinedim
