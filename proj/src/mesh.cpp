#include "splinedim/mesh.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace splinedim {

Rational AffineForm::evaluate(const Point& p) const {
  if (p.size() != coefficients.size()) {
    throw std::invalid_argument("affine form evaluated at point of wrong dimension");
  }
  Rational v = constant;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!coefficients[i].is_zero()) v += coefficients[i] * p[i];
  }
  return v;
}

SimplicialComplex::SimplicialComplex(int ambient_dim, std::vector<Point> vertices,
                                     std::vector<Simplex> cells)
    : ambient_dim_(ambient_dim) {
  if (ambient_dim < 1) {
    throw std::invalid_argument("ambient dimension must be at least 1");
  }
  for (const Point& p : vertices) {
    if (static_cast<int>(p.size()) != ambient_dim) {
      throw std::invalid_argument("vertex coordinate count differs from ambient dimension");
    }
  }
  // merge vertices with identical coordinates, keeping first-occurrence order
  std::map<Point, int> seen;
  std::vector<int> remap(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto it = seen.find(vertices[i]);
    if (it == seen.end()) {
      int id = static_cast<int>(vertices_.size());
      seen.emplace(vertices[i], id);
      vertices_.push_back(vertices[i]);
      remap[i] = id;
    } else {
      remap[i] = it->second;
    }
  }
  for (Simplex& cell : cells) {
    if (cell.vertices.empty() ||
        cell.vertices.size() > static_cast<std::size_t>(ambient_dim) + 1) {
      throw std::invalid_argument("cell vertex count out of range for ambient dimension");
    }
    for (int& v : cell.vertices) {
      if (v < 0 || v >= static_cast<int>(remap.size())) {
        throw std::invalid_argument("cell references a vertex that does not exist");
      }
      v = remap[v];
    }
    std::sort(cell.vertices.begin(), cell.vertices.end());
    if (std::adjacent_find(cell.vertices.begin(), cell.vertices.end()) !=
        cell.vertices.end()) {
      throw std::invalid_argument("cell has repeated vertices");
    }
    cells_.push_back(std::move(cell));
  }
  build_face_lattice();
}

namespace {

void collect_subsets(const std::vector<int>& verts, std::size_t size, std::size_t start,
                     std::vector<int>& current, std::set<Simplex>& out) {
  if (current.size() == size) {
    out.insert(Simplex{current});
    return;
  }
  for (std::size_t i = start; i < verts.size(); ++i) {
    current.push_back(verts[i]);
    collect_subsets(verts, size, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

void SimplicialComplex::build_face_lattice() {
  const int k = ambient_dim_;
  faces_by_dim_.assign(k + 1, {});
  interior_by_dim_.assign(k + 1, {});
  for (int i = 0; i <= k; ++i) {
    std::set<Simplex> collected;
    for (const Simplex& cell : cells_) {
      if (cell.vertices.size() < static_cast<std::size_t>(i) + 1) continue;
      std::vector<int> current;
      collect_subsets(cell.vertices, i + 1, 0, current, collected);
    }
    faces_by_dim_[i].assign(collected.begin(), collected.end());
  }

  boundary_facets_.clear();
  if (k >= 1) {
    for (const Simplex& facet : faces_by_dim_[k - 1]) {
      if (incident_cells(facet).size() == 1) boundary_facets_.push_back(facet);
    }
  }

  interior_by_dim_[k] = faces_by_dim_[k];
  std::vector<std::vector<Point>> boundary_points;
  boundary_points.reserve(boundary_facets_.size());
  for (const Simplex& b : boundary_facets_) boundary_points.push_back(face_points(b));
  for (int i = 0; i < k; ++i) {
    for (const Simplex& face : faces_by_dim_[i]) {
      bool in_boundary = false;
      std::vector<Point> pts = face_points(face);
      for (const auto& bpts : boundary_points) {
        if (geometric_contains_points(bpts, pts)) {
          in_boundary = true;
          break;
        }
      }
      if (!in_boundary) interior_by_dim_[i].push_back(face);
    }
  }
}

const std::vector<Simplex>& SimplicialComplex::faces(int i) const {
  if (i < 0 || i > ambient_dim_) {
    throw std::invalid_argument("face dimension out of range");
  }
  return faces_by_dim_[i];
}

const std::vector<Simplex>& SimplicialComplex::interior_faces(int i) const {
  if (i < 0 || i > ambient_dim_) {
    throw std::invalid_argument("face dimension out of range");
  }
  return interior_by_dim_[i];
}

std::vector<int> SimplicialComplex::incident_cells(const Simplex& face) const {
  std::vector<int> out;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (std::includes(cells_[c].vertices.begin(), cells_[c].vertices.end(),
                      face.vertices.begin(), face.vertices.end())) {
      out.push_back(static_cast<int>(c));
    }
  }
  return out;
}

std::vector<Point> SimplicialComplex::face_points(const Simplex& s) const {
  std::vector<Point> pts;
  pts.reserve(s.vertices.size());
  for (int v : s.vertices) pts.push_back(vertices_[v]);
  return pts;
}

Rational scaled_volume(const std::vector<Point>& simplex_points) {
  if (simplex_points.empty()) throw std::invalid_argument("empty simplex");
  const std::size_t k = simplex_points.size() - 1;
  if (k == 0) return Rational(1);
  QMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (simplex_points[i + 1].size() != k || simplex_points[0].size() != k) {
      throw std::invalid_argument("scaled_volume needs a full-dimensional simplex");
    }
    for (std::size_t j = 0; j < k; ++j) {
      m(i, j) = simplex_points[i + 1][j] - simplex_points[0][j];
    }
  }
  // determinant by forward elimination
  Rational det = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t sel = col;
    while (sel < k && m(sel, col).is_zero()) ++sel;
    if (sel == k) return Rational(0);
    if (sel != col) {
      for (std::size_t j = col; j < k; ++j) m(sel, j).swap(m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < k; ++i) {
      if (m(i, col).is_zero()) continue;
      Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < k; ++j) {
        if (!m(col, j).is_zero()) m(i, j) -= f * m(col, j);
      }
    }
  }
  return det < 0 ? Rational(-det) : det;
}

AffineForm affine_span_form(const std::vector<Point>& facet_points) {
  if (facet_points.empty()) throw std::invalid_argument("empty facet");
  const std::size_t k = facet_points[0].size();
  if (facet_points.size() != k) {
    throw std::invalid_argument("hyperplane span needs exactly k points in R^k");
  }
  // null space of the k x (k+1) system (v, 1) . (c, c0) = 0
  QMatrix m(k, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = facet_points[i][j];
    m(i, k) = 1;
  }
  auto kernel = kernel_basis(m);
  if (kernel.size() != 1) {
    throw std::invalid_argument("degenerate facet: affinely dependent vertices");
  }
  AffineForm form;
  form.coefficients.assign(kernel[0].begin(), kernel[0].begin() + k);
  form.constant = kernel[0][k];
  // canonical scaling: first nonzero coordinate coefficient becomes 1
  for (const Rational& c : form.coefficients) {
    if (!c.is_zero()) {
      Rational inv = 1 / c;
      for (Rational& x : form.coefficients) x *= inv;
      form.constant *= inv;
      return form;
    }
  }
  throw std::invalid_argument("degenerate facet: affinely dependent vertices");
}

AffineForm facet_form(const SimplicialComplex& complex, const Simplex& tau) {
  if (tau.dim() != complex.ambient_dim() - 1) {
    throw std::invalid_argument("facet_form expects a (k-1)-face");
  }
  return affine_span_form(complex.face_points(tau));
}

std::optional<std::vector<Rational>> barycentric_coordinates(
    const Point& p, const std::vector<Point>& simplex_points) {
  if (simplex_points.empty()) return std::nullopt;
  const std::size_t k = p.size();
  const std::size_t m = simplex_points.size();
  QMatrix a(k + 1, m);
  std::vector<Rational> rhs(k + 1);
  for (std::size_t j = 0; j < m; ++j) {
    if (simplex_points[j].size() != k) return std::nullopt;
    for (std::size_t i = 0; i < k; ++i) a(i, j) = simplex_points[j][i];
    a(k, j) = 1;
  }
  for (std::size_t i = 0; i < k; ++i) rhs[i] = p[i];
  rhs[k] = 1;
  return solve_unique(a, rhs);
}

bool point_in_simplex(const Point& p, const std::vector<Point>& simplex_points) {
  auto bc = barycentric_coordinates(p, simplex_points);
  if (!bc) return false;
  for (const Rational& c : *bc) {
    if (c < 0) return false;
  }
  return true;
}

bool point_strictly_inside(const Point& p, const std::vector<Point>& simplex_points) {
  auto bc = barycentric_coordinates(p, simplex_points);
  if (!bc) return false;
  for (const Rational& c : *bc) {
    if (c <= 0) return false;
  }
  return true;
}

bool geometric_contains_points(const std::vector<Point>& outer,
                               const std::vector<Point>& inner) {
  for (const Point& p : inner) {
    if (!point_in_simplex(p, outer)) return false;
  }
  return true;
}

bool geometric_contains(const SimplicialComplex& gamma_complex, const Simplex& gamma,
                        const SimplicialComplex& tau_complex, const Simplex& tau) {
  if (gamma_complex.ambient_dim() != tau_complex.ambient_dim()) {
    throw std::invalid_argument("geometric_contains: ambient dimension mismatch");
  }
  return geometric_contains_points(tau_complex.face_points(tau),
                                   gamma_complex.face_points(gamma));
}

Point barycenter(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("barycenter of no points");
  Point out(points[0].size(), Rational(0));
  for (const Point& p : points) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += p[i];
  }
  Rational inv(1, static_cast<long>(points.size()));
  for (Rational& c : out) c *= inv;
  return out;
}

Point barycenter(const SimplicialComplex& complex, const Simplex& s) {
  return barycenter(complex.face_points(s));
}

Point line_hyperplane_intersection(const Point& p, const Point& q,
                                   const std::vector<Point>& facet_points) {
  if (p == q) throw std::invalid_argument("line through two identical points");
  AffineForm form = affine_span_form(facet_points);
  Rational fp = form.evaluate(p);
  Rational fq = form.evaluate(q);
  if (fp == fq) {
    throw std::invalid_argument("line is parallel to the hyperplane");
  }
  Rational t = fp / (fp - fq);
  Point out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] + t * (q[i] - p[i]);
  return out;
}

namespace {

/** Inward-oriented halfspace forms of a nondegenerate k-cell. */
std::vector<AffineForm> cell_halfspaces(const SimplicialComplex& complex,
                                        const Simplex& cell) {
  std::vector<AffineForm> out;
  const auto& verts = cell.vertices;
  for (std::size_t j = 0; j < verts.size(); ++j) {
    std::vector<Point> facet;
    for (std::size_t t = 0; t < verts.size(); ++t) {
      if (t != j) facet.push_back(complex.vertex(verts[t]));
    }
    AffineForm form = affine_span_form(facet);
    Rational at_opposite = form.evaluate(complex.vertex(verts[j]));
    if (at_opposite < 0) {
      for (Rational& c : form.coefficients) c = -c;
      form.constant = -form.constant;
    }
    out.push_back(std::move(form));
  }
  return out;
}

void enumerate_combinations(std::size_t n, std::size_t k, std::size_t start,
                            std::vector<std::size_t>& current,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (current.size() == k) {
    fn(current);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    current.push_back(i);
    enumerate_combinations(n, k, i + 1, current, fn);
    current.pop_back();
  }
}

/**
 * Vertices of the intersection polytope of two k-cells, found exactly by
 * solving every k-subset of the combined facet hyperplanes and keeping the
 * feasible solutions.
 */
std::vector<Point> intersection_polytope_vertices(const SimplicialComplex& complex,
                                                  const Simplex& cell_a,
                                                  const Simplex& cell_b) {
  const std::size_t k = complex.ambient_dim();
  std::vector<AffineForm> halfspaces = cell_halfspaces(complex, cell_a);
  std::vector<AffineForm> hb = cell_halfspaces(complex, cell_b);
  halfspaces.insert(halfspaces.end(), hb.begin(), hb.end());

  std::set<Point> found;
  std::vector<std::size_t> current;
  enumerate_combinations(
      halfspaces.size(), k, 0, current, [&](const std::vector<std::size_t>& pick) {
        QMatrix a(k, k);
        std::vector<Rational> rhs(k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            a(i, j) = halfspaces[pick[i]].coefficients[j];
          }
          rhs[i] = -halfspaces[pick[i]].constant;
        }
        auto x = solve_unique(a, rhs);
        if (!x) return;
        for (const AffineForm& h : halfspaces) {
          if (h.evaluate(*x) < 0) return;
        }
        found.insert(*x);
      });
  return {found.begin(), found.end()};
}

bool bounding_boxes_disjoint(const SimplicialComplex& complex, const Simplex& a,
                             const Simplex& b) {
  const int k = complex.ambient_dim();
  for (int i = 0; i < k; ++i) {
    Rational amin, amax, bmin, bmax;
    bool first = true;
    for (int v : a.vertices) {
      const Rational& c = complex.vertex(v)[i];
      if (first || c < amin) amin = c;
      if (first || c > amax) amax = c;
      first = false;
    }
    first = true;
    for (int v : b.vertices) {
      const Rational& c = complex.vertex(v)[i];
      if (first || c < bmin) bmin = c;
      if (first || c > bmax) bmax = c;
      first = false;
    }
    if (amax < bmin || bmax < amin) return true;
  }
  return false;
}

}  // namespace

ValidationReport validate(const SimplicialComplex& complex) {
  ValidationReport report;
  const int k = complex.ambient_dim();
  const auto& cells = complex.cells();

  std::vector<bool> usable(cells.size(), true);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].vertices.size() != static_cast<std::size_t>(k) + 1) {
      report.violations.push_back("non-pure: cell " + std::to_string(c) +
                                  " has dimension " +
                                  std::to_string(cells[c].dim()));
      usable[c] = false;
      continue;
    }
    if (scaled_volume(complex.face_points(cells[c])).is_zero()) {
      report.violations.push_back("degenerate cell " + std::to_string(c) +
                                  ": zero affine volume");
      usable[c] = false;
    }
  }

  for (std::size_t c1 = 0; c1 < cells.size(); ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < cells.size(); ++c2) {
      if (cells[c1] == cells[c2]) {
        report.violations.push_back("duplicate cell: " + std::to_string(c1) +
                                    " and " + std::to_string(c2));
      }
    }
  }
  if (!report.violations.empty()) return report;

  // pairwise intersections must equal the convex hull of shared vertices
  for (std::size_t c1 = 0; c1 < cells.size(); ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < cells.size(); ++c2) {
      if (!usable[c1] || !usable[c2]) continue;
      if (bounding_boxes_disjoint(complex, cells[c1], cells[c2])) continue;
      std::vector<int> common;
      std::set_intersection(cells[c1].vertices.begin(), cells[c1].vertices.end(),
                            cells[c2].vertices.begin(), cells[c2].vertices.end(),
                            std::back_inserter(common));
      std::vector<Point> common_points;
      for (int v : common) common_points.push_back(complex.vertex(v));

      auto poly_vertices = intersection_polytope_vertices(complex, cells[c1], cells[c2]);
      for (const Point& p : poly_vertices) {
        bool inside = !common_points.empty() && point_in_simplex(p, common_points);
        if (!inside) {
          report.violations.push_back(
              "improper intersection between cells " + std::to_string(c1) +
              " and " + std::to_string(c2));
          break;
        }
      }
    }
  }

  if (k >= 1) {
    for (const Simplex& facet : complex.faces(k - 1)) {
      std::size_t count = complex.incident_cells(facet).size();
      if (count > 2) {
        report.violations.push_back("facet shared by more than two cells");
      }
    }
  }
  return report;
}

}  // namespace splinedim
