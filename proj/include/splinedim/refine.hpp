#ifndef SPLINEDIM_REFINE_HPP
#define SPLINEDIM_REFINE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "splinedim/algebra.hpp"
#include "splinedim/mesh.hpp"

namespace splinedim {

/**
 * One cell replacement: coarse complex, the replaced cell, the subdividing
 * piece (a standalone complex covering the cell exactly), and the resulting
 * fine complex. new_boundary_faces lists the faces of the piece's boundary
 * that are interior to the fine complex, as point tuples; these are exactly
 * the faces on which the split predicate compares face ideals.
 */
struct SubdivisionRecord {
  SimplicialComplex coarse;
  Simplex cell;
  SimplicialComplex piece;
  SimplicialComplex fine;
  std::vector<std::vector<Point>> new_boundary_faces;
};

/** Iterated construction: each step refines the previous step's result. */
struct SubdivisionSequence {
  std::vector<SubdivisionRecord> steps;
  const SimplicialComplex& result() const { return steps.back().fine; }
};

/** The standard simplex scaled so the barycenter is integral:
 *  vertices 0 and (k+1) e_i. */
SimplicialComplex builtin_simplex(int k);

/**
 * Does the piece subdivide the cell exactly: a valid complex, every piece
 * vertex inside the cell, and the piece volumes summing to the cell volume.
 */
bool covers(const SimplicialComplex& complex, const Simplex& cell,
            const SimplicialComplex& piece);

/**
 * Boundary agreement up to the complex's boundary: every face of the piece's
 * boundary that is not a face of the cell lies inside the coarse boundary,
 * and every face of the cell's boundary missing from the piece does too.
 * This is what makes the cell replacement a simplicial complex again.
 *
 * @throws std::invalid_argument if the piece does not cover the cell.
 */
bool is_simple(const SimplicialComplex& complex, int cell_index,
               const SimplicialComplex& piece);

/**
 * Replace one maximal cell by a subdividing piece.
 * @throws std::invalid_argument on coverage or simplicity failure, or when
 * the assembled complex does not validate.
 */
SubdivisionRecord replace_cell(const SimplicialComplex& complex, int cell_index,
                               const SimplicialComplex& piece);

/**
 * Alfeld split: cone an interior point over the cell's boundary, giving k+1
 * subsimplices. u defaults to the barycenter.
 * @throws std::invalid_argument if u is not strictly interior.
 */
SubdivisionRecord alfeld(const SimplicialComplex& complex, int cell_index,
                         const std::optional<Point>& u = std::nullopt);

/**
 * Facet split of a single k-simplex: Alfeld split at u, then for each
 * selected facet F_i the cell [u, F_i] is replaced by the cone from u over
 * the Alfeld split of F_i at u_i = line(v_i, u) meet aff(F_i). Step 0 of the
 * returned sequence is the initial Alfeld split. The full split has k^2+k
 * cells, one interior vertex and 2k+2 boundary vertices.
 *
 * @throws std::invalid_argument if the input is not a single cell, u is not
 * strictly interior, or some u_i fails strict interiority in F_i.
 */
SubdivisionSequence facet_split(const SimplicialComplex& single_cell,
                                const std::optional<Point>& u = std::nullopt,
                                const std::optional<std::set<int>>& subset = std::nullopt);

/**
 * Double Alfeld split of a single k-simplex: Alfeld split at u, then each
 * selected subsimplex [u, F_i] is Alfeld split at a point u_i collinear with
 * u and v_i; the default u_i = ((k+2) u - v_i)/(k+1) lies on that line and
 * equals the barycenter of [u, F_i] when u is the barycenter. The full split
 * has (k+1)^2 cells, k+2 interior vertices and k+1 boundary vertices.
 *
 * @throws std::invalid_argument on interiority failure, or when custom
 * points break the collinearity requirement.
 */
SubdivisionSequence double_alfeld(
    const SimplicialComplex& single_cell, const std::optional<Point>& u = std::nullopt,
    const std::optional<std::set<int>>& subset = std::nullopt,
    const std::vector<std::optional<Point>>& custom_ui = {});

struct SplitCheck {
  bool split = true;
  // failing faces, as point tuples
  std::vector<std::vector<Point>> witnesses;
};

/**
 * The split predicate: for every face of the piece's boundary that is
 * interior to the fine complex, the face ideal computed in the fine complex
 * must equal the one computed in the coarse complex. Faces lying in the
 * domain boundary carry no condition. Returns all failing faces.
 */
SplitCheck is_split(const SubdivisionRecord& record, int r);

struct AdditivityReport {
  bool split_ok = false;
  bool hypothesis_ok = true;  // vanishing of H_(k-1) on the coarse complex
  bool ok = false;
  struct Row {
    long d;
    long fine_dim;
    long coarse_dim;
    long piece_dim;
    long global_dim;  // binom(d+k, k)
    bool holds;
    bool skipped;
  };
  std::vector<Row> rows;
  std::vector<std::string> notes;
};

/**
 * Checks dim S(fine)_d = dim S(coarse)_d + dim S(piece)_d - binom(d+k, k)
 * for d in [d_min, d_max], all three dimensions computed by the oracle, and
 * verifies the hypotheses first (split predicate, vanishing of the coarse
 * complex's homology at index k-1 in each tested degree). Degrees whose
 * system size exceeds max_columns are reported as skipped; 0 means no limit.
 */
AdditivityReport verify_additivity(const SubdivisionRecord& record, int r,
                                   long d_min, long d_max, long max_columns = 0);

}  // namespace splinedim

#endif
