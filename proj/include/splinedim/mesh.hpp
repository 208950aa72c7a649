#ifndef SPLINEDIM_MESH_HPP
#define SPLINEDIM_MESH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splinedim/linalg.hpp"
#include "splinedim/rational.hpp"

namespace splinedim {

/** A point of R^k with exact rational coordinates. */
using Point = std::vector<Rational>;

/** Face of a complex: sorted list of distinct vertex indices. */
struct Simplex {
  std::vector<int> vertices;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  auto operator<=>(const Simplex&) const = default;
};

/**
 * Affine form c . x + c0 on R^k, canonically scaled so the first nonzero
 * coordinate coefficient equals 1. Two facets span the same hyperplane iff
 * their canonical forms are equal.
 */
struct AffineForm {
  std::vector<Rational> coefficients;
  Rational constant;

  Rational evaluate(const Point& p) const;
  bool operator==(const AffineForm&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/**
 * Simplicial complex in R^k given by rational vertices and maximal k-cells.
 * Construction merges vertices with identical coordinates, sorts each cell's
 * vertex list, and precomputes the face lattice with interior/boundary
 * classification. Complexes are immutable afterwards; all queries are pure.
 *
 * Geometric validity (nondegenerate cells, proper pairwise intersections,
 * each facet in at most two cells) is checked by validate(), not by the
 * constructor.
 */
class SimplicialComplex {
 public:
  SimplicialComplex(int ambient_dim, std::vector<Point> vertices,
                    std::vector<Simplex> cells);

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Simplex>& cells() const { return cells_; }

  /** i-dimensional faces, deduplicated, lexicographic order.
   *  @throws std::invalid_argument if i is out of [0, k]. */
  const std::vector<Simplex>& faces(int i) const;

  /** Interior i-faces. i = k gives all cells; i < k gives the faces not
   *  geometrically contained in any boundary facet. */
  const std::vector<Simplex>& interior_faces(int i) const;

  /** (k-1)-faces lying in exactly one cell. */
  const std::vector<Simplex>& boundary_facets() const { return boundary_facets_; }

  /** Indices of the cells whose vertex set contains the given face. */
  std::vector<int> incident_cells(const Simplex& face) const;

  const Point& vertex(int id) const { return vertices_[id]; }
  std::vector<Point> face_points(const Simplex& s) const;

 private:
  void build_face_lattice();

  int ambient_dim_;
  std::vector<Point> vertices_;
  std::vector<Simplex> cells_;
  std::vector<std::vector<Simplex>> faces_by_dim_;
  std::vector<std::vector<Simplex>> interior_by_dim_;
  std::vector<Simplex> boundary_facets_;
};

/**
 * Full geometric validation: degenerate cells, non-pure cells, duplicate
 * cells, improper pairwise intersections (decided exactly by enumerating the
 * vertices of each pairwise intersection polytope), facets shared by more
 * than two cells.
 */
ValidationReport validate(const SimplicialComplex& complex);

/** Canonical affine form vanishing exactly on the affine span of facet tau.
 *  @throws std::invalid_argument if tau is degenerate. */
AffineForm facet_form(const SimplicialComplex& complex, const Simplex& tau);
AffineForm affine_span_form(const std::vector<Point>& facet_points);

/**
 * Barycentric coordinates of p with respect to an affinely independent point
 * tuple; std::nullopt if p is outside the affine span or the tuple is
 * degenerate.
 */
std::optional<std::vector<Rational>> barycentric_coordinates(
    const Point& p, const std::vector<Point>& simplex_points);

/** conv(inner) subset of conv(outer), by exact barycentric coordinates. */
bool geometric_contains_points(const std::vector<Point>& outer,
                               const std::vector<Point>& inner);

/** Containment of faces gamma and tau (possibly from different complexes
 *  sharing the ambient space): conv(gamma) subset of conv(tau). */
bool geometric_contains(const SimplicialComplex& gamma_complex, const Simplex& gamma,
                        const SimplicialComplex& tau_complex, const Simplex& tau);

/** All barycentric coordinates nonnegative / strictly positive. */
bool point_in_simplex(const Point& p, const std::vector<Point>& simplex_points);
bool point_strictly_inside(const Point& p, const std::vector<Point>& simplex_points);

Point barycenter(const std::vector<Point>& points);
Point barycenter(const SimplicialComplex& complex, const Simplex& s);

/**
 * The unique point of line(p, q) on the affine span of the facet.
 * @throws std::invalid_argument if p = q, the facet is degenerate, or the
 * line is parallel to the hyperplane.
 */
Point line_hyperplane_intersection(const Point& p, const Point& q,
                                   const std::vector<Point>& facet_points);

/** |det[v_1 - v_0, ..., v_k - v_0]|, i.e. k! times the simplex volume. */
Rational scaled_volume(const std::vector<Point>& simplex_points);

}  // namespace splinedim

#endif
