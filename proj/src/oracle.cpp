#include "splinedim/oracle.hpp"

#include <stdexcept>

namespace splinedim {

namespace {

struct FacetConstraintData {
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> complement_cols;
  QMatrix reduced;  // rref of the divisible subspace rows
};

/** Row space of l^(r+1) * (polynomials of complementary degree) and the
 *  induced complement projection data. */
FacetConstraintData divisible_subspace(const Poly& form_poly, int r, long d,
                                       const std::vector<Monomial>& basis,
                                       const std::map<Monomial, std::size_t>& index,
                                       bool homogeneous, int nvars) {
  FacetConstraintData out;
  const long rem_degree = d - (r + 1);
  std::vector<Monomial> multipliers;
  if (rem_degree >= 0) {
    multipliers = homogeneous ? homogeneous_monomials(nvars, rem_degree)
                              : monomials_up_to(nvars, rem_degree);
  }
  Poly power = form_poly.pow(static_cast<unsigned>(r + 1));
  QMatrix rows(multipliers.size(), basis.size());
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    for (const auto& [mono, coeff] : power.terms()) {
      Monomial shifted = mono;
      for (int v = 0; v < nvars; ++v) shifted.exponents[v] += multipliers[i].exponents[v];
      rows(i, index.at(shifted)) = coeff;
    }
  }
  RrefResult rr = rref(rows);
  out.pivot_cols = rr.pivot_cols;
  out.reduced = std::move(rr.reduced);
  std::vector<bool> is_pivot(basis.size(), false);
  for (std::size_t p : out.pivot_cols) is_pivot[p] = true;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    if (!is_pivot[c]) out.complement_cols.push_back(c);
  }
  return out;
}

}  // namespace

SplineSystem smoothness_system(const SimplicialComplex& complex, int r, long d,
                               SplineMode mode) {
  if (r < 0 || d < 0) {
    throw std::invalid_argument("smoothness and degree must be nonnegative");
  }
  ValidationReport report = validate(complex);
  if (!report.ok()) {
    throw std::invalid_argument("smoothness system over an invalid complex: " +
                                report.violations.front());
  }
  const int k = complex.ambient_dim();
  const bool homogeneous = (mode == SplineMode::cone);
  const int nvars = homogeneous ? k + 1 : k;
  std::vector<Monomial> basis = homogeneous ? homogeneous_monomials(nvars, d)
                                            : monomials_up_to(nvars, d);
  auto index = basis_index(basis);
  const long block = static_cast<long>(basis.size());

  SplineSystem sys;
  sys.mode = mode;
  sys.r = r;
  sys.d = d;
  sys.cell_count = static_cast<long>(complex.cells().size());
  sys.block_dim = block;

  const auto& interior = complex.interior_faces(k - 1);
  std::vector<FacetConstraintData> data;
  long total_rows = 0;
  data.reserve(interior.size());
  for (const Simplex& tau : interior) {
    AffineForm affine = facet_form(complex, tau);
    Poly form_poly = homogeneous ? form_to_poly(homogenize(affine))
                                 : Poly::linear(affine.coefficients, affine.constant);
    data.push_back(divisible_subspace(form_poly, r, d, basis, index, homogeneous, nvars));
    total_rows += static_cast<long>(data.back().complement_cols.size());
  }

  QMatrix constraints(total_rows, sys.cell_count * block);
  long row_base = 0;
  for (std::size_t t = 0; t < interior.size(); ++t) {
    auto cells = complex.incident_cells(interior[t]);
    // validated interior facet: exactly two incident cells, ordered by index
    const long c1 = cells[0], c2 = cells[1];
    const FacetConstraintData& fc = data[t];
    for (std::size_t np = 0; np < fc.complement_cols.size(); ++np) {
      const long row = row_base + static_cast<long>(np);
      const std::size_t np_col = fc.complement_cols[np];
      constraints(row, c1 * block + np_col) += 1;
      constraints(row, c2 * block + np_col) -= 1;
      for (std::size_t j = 0; j < fc.pivot_cols.size(); ++j) {
        const Rational& v = fc.reduced(j, np_col);
        if (v.is_zero()) continue;
        constraints(row, c1 * block + fc.pivot_cols[j]) -= v;
        constraints(row, c2 * block + fc.pivot_cols[j]) += v;
      }
    }
    row_base += static_cast<long>(fc.complement_cols.size());
  }
  sys.constraints = std::move(constraints);
  return sys;
}

long spline_dim(const SimplicialComplex& complex, int r, long d, SplineMode mode) {
  SplineSystem sys = smoothness_system(complex, r, d, mode);
  return sys.cell_count * sys.block_dim -
         static_cast<long>(rank(sys.constraints));
}

std::vector<PiecewisePoly> spline_basis(const SimplicialComplex& complex, int r,
                                        long d, SplineMode mode) {
  SplineSystem sys = smoothness_system(complex, r, d, mode);
  const int k = complex.ambient_dim();
  const bool homogeneous = (mode == SplineMode::cone);
  const int nvars = homogeneous ? k + 1 : k;
  std::vector<Monomial> basis = homogeneous ? homogeneous_monomials(nvars, d)
                                            : monomials_up_to(nvars, d);

  std::vector<PiecewisePoly> out;
  for (const auto& vec : kernel_basis(sys.constraints)) {
    PiecewisePoly f;
    f.mode = mode;
    f.d = d;
    for (long c = 0; c < sys.cell_count; ++c) {
      Poly piece(nvars);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const Rational& coeff = vec[c * sys.block_dim + b];
        if (!coeff.is_zero()) piece.add_term(basis[b], coeff);
      }
      f.pieces.push_back(std::move(piece));
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool is_spline(const SimplicialComplex& complex, int r, const PiecewisePoly& f) {
  if (f.pieces.size() != complex.cells().size()) {
    throw std::invalid_argument("piecewise polynomial does not match the cells");
  }
  const int k = complex.ambient_dim();
  const bool homogeneous = (f.mode == SplineMode::cone);
  for (const Simplex& tau : complex.interior_faces(k - 1)) {
    auto cells = complex.incident_cells(tau);
    Poly diff = f.pieces[cells[0]] - f.pieces[cells[1]];
    if (diff.is_zero()) continue;
    AffineForm affine = facet_form(complex, tau);
    Poly divisor = homogeneous ? form_to_poly(homogenize(affine))
                               : Poly::linear(affine.coefficients, affine.constant);
    int main_var = -1;
    const int nvars = divisor.nvars();
    for (int v = homogeneous ? 1 : 0; v < nvars && main_var < 0; ++v) {
      Monomial m{std::vector<unsigned>(nvars, 0)};
      m.exponents[v] = 1;
      if (!divisor.coefficient(m).is_zero()) main_var = v;
    }
    if (!divisible_by_power(diff, divisor, main_var, static_cast<unsigned>(r + 1))) {
      return false;
    }
  }
  return true;
}

}  // namespace splinedim
