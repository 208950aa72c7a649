#ifndef SPLINEDIM_ORACLE_HPP
#define SPLINEDIM_ORACLE_HPP

#include <vector>

#include "splinedim/algebra.hpp"
#include "splinedim/mesh.hpp"
#include "splinedim/poly.hpp"

namespace splinedim {

/**
 * affine: pieces are polynomials of degree <= d in the k ambient variables.
 * cone:   pieces are homogeneous of degree d in k+1 variables (the coned
 *         complex), with x_0 the homogenizing variable.
 * Both spaces have the same dimension and the two assemblies are kept fully
 * independent so their agreement is a meaningful cross-check.
 */
enum class SplineMode { affine, cone };

/**
 * The per-degree linear system whose kernel is the spline space: unknowns
 * are one polynomial coefficient block per cell, and for every interior
 * facet the projection of the difference of its two cell blocks onto a
 * complement of the divisible subspace l^(r+1) * R_(d-r-1) must vanish.
 */
struct SplineSystem {
  SplineMode mode = SplineMode::cone;
  int r = 0;
  long d = 0;
  long cell_count = 0;
  long block_dim = 0;  // unknowns per cell
  QMatrix constraints;
};

/** Piecewise polynomial: one polynomial per maximal cell. */
struct PiecewisePoly {
  SplineMode mode = SplineMode::affine;
  long d = 0;
  std::vector<Poly> pieces;
};

/** @throws std::invalid_argument if the complex does not validate. */
SplineSystem smoothness_system(const SimplicialComplex& complex, int r, long d,
                               SplineMode mode);

/** Number of cells times the block dimension minus the constraint rank. */
long spline_dim(const SimplicialComplex& complex, int r, long d,
                SplineMode mode = SplineMode::cone);

/**
 * Deterministically echelonized vector-space basis of the spline space,
 * kernel vectors reshaped into per-cell polynomials.
 */
std::vector<PiecewisePoly> spline_basis(const SimplicialComplex& complex, int r,
                                        long d, SplineMode mode = SplineMode::affine);

/**
 * Independent membership checker: across every interior facet the difference
 * of the two incident pieces must be exactly divisible by the (r+1)-st power
 * of the facet form, verified by repeated polynomial division.
 *
 * @throws std::invalid_argument if the piece count does not match the cells.
 */
bool is_spline(const SimplicialComplex& complex, int r, const PiecewisePoly& f);

}  // namespace splinedim

#endif
