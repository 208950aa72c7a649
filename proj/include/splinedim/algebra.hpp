#ifndef SPLINEDIM_ALGEBRA_HPP
#define SPLINEDIM_ALGEBRA_HPP

#include <utility>
#include <vector>

#include "splinedim/mesh.hpp"
#include "splinedim/poly.hpp"

namespace splinedim {

/**
 * Homogeneous linear form in k+1 variables, with x_0 the homogenizing
 * variable. Canonically scaled: first nonzero coefficient equals 1, so forms
 * defining the same hyperplane through the origin compare equal.
 */
struct LinearForm {
  std::vector<Rational> coefficients;

  int nvars() const { return static_cast<int>(coefficients.size()); }
  auto operator<=>(const LinearForm&) const = default;
};

/** Homogenize an affine form: the constant becomes the x_0 coefficient.
 *  Dehomogenizing at x_0 = 1 recovers the input up to the canonical scalar.
 *  @throws std::invalid_argument on the zero form. */
LinearForm homogenize(const AffineForm& f);

/** The form as a degree-1 polynomial in its k+1 variables. */
Poly form_to_poly(const LinearForm& l);

/**
 * Ideal generated by the m-th powers of a set of pairwise non-proportional
 * linear forms, all in the same degree m = r+1. The empty set is the zero
 * ideal (used for the top chain complex terms).
 */
struct PowerIdeal {
  std::vector<LinearForm> forms;
  int exponent = 1;
};

/**
 * The face ideal of gamma: m-th powers of the homogenized facet forms of
 * every (k-1)-face of the complex geometrically containing gamma, forms
 * deduplicated up to scalar. gamma may belong to a different complex in the
 * same ambient space; containment is decided by exact barycentric
 * coordinates.
 */
PowerIdeal face_ideal(const SimplicialComplex& complex,
                      const std::vector<Point>& gamma_points, int r);
PowerIdeal face_ideal(const SimplicialComplex& complex, const Simplex& gamma, int r);

/** Number of monomials of exact degree d in nvars variables (0 for d < 0). */
long graded_dim_full(int nvars, long d);

/**
 * Dimension of the degree-d graded piece of the ideal: the rank of the
 * coefficient matrix of { l^m * mu } over the degree-d monomial basis.
 * For a single generator the rank equals the number of multiplier monomials
 * (multiplication by a nonzero form is injective), which is used as a
 * shortcut; the equivalence is exercised by tests.
 */
long ideal_graded_dim(const PowerIdeal& ideal, long d, int nvars);

/** Dimension of (R/J)_d. */
long quotient_graded_dim(const PowerIdeal& ideal, long d, int nvars);

/**
 * Ideal equality. Both ideals are generated purely in degree m, so they are
 * equal iff the spans of their generator powers agree in degree m; decided
 * by row space comparison.
 *
 * @throws std::invalid_argument if the exponents differ.
 */
bool ideals_equal(const PowerIdeal& a, const PowerIdeal& b);

/**
 * The chain complex of quotient rings over the interior faces of a complex:
 * index k carries one copy of the full ring per cell, index i < k one
 * quotient R/J per interior i-face, with the simplicial boundary operator
 * restricted to interior faces (sign (-1)^j for omitting the j-th vertex of
 * the sorted list).
 */
struct ChainComplexRJ {
  int k = 0;
  int nvars = 0;  // k + 1, the coned setting

  struct Term {
    Simplex face;
    PowerIdeal ideal;
  };
  // terms[i]: summands of homological index i, for i = 0..k
  std::vector<std::vector<Term>> terms;
  // boundary[i][f]: (index into terms[i-1], sign) pairs, for i >= 1
  std::vector<std::vector<std::vector<std::pair<int, int>>>> boundary;

  long term_graded_dim(int i, long d) const;
};

/** @throws std::invalid_argument when validation fails. */
ChainComplexRJ build_chain_complex(const SimplicialComplex& complex, int r);

/** Degree-d realization: term dimensions and boundary matrices
 *  boundaries[i-1] : C_i -> C_{i-1} for i = 1..k, on the monomial-complement
 *  bases of the quotients. */
struct GradedChainRealization {
  std::vector<long> term_dims;      // index i = homological degree
  std::vector<QMatrix> boundaries;  // boundaries[i-1] is the matrix of d_i
};

GradedChainRealization realize_chain_degree(const ChainComplexRJ& chain, long d);

/** dim H_i of the chain complex in degree d, for i = 0..k. */
std::vector<long> homology_graded_dims(const ChainComplexRJ& chain, long d);
std::vector<long> homology_graded_dims(const SimplicialComplex& complex, int r, long d);

/**
 * Alternating sum of the degree-d term dimensions, top index positive.
 * Equals the spline space dimension whenever the homology below the top
 * index vanishes in every degree; pairing this with the homology check is
 * the caller's responsibility.
 */
long euler_dim(const ChainComplexRJ& chain, long d);
long euler_dim(const SimplicialComplex& complex, int r, long d);

}  // namespace splinedim

#endif
