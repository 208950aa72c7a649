#include "splinedim/algebra.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace splinedim {

LinearForm homogenize(const AffineForm& f) {
  LinearForm out;
  out.coefficients.reserve(f.coefficients.size() + 1);
  out.coefficients.push_back(f.constant);
  for (const Rational& c : f.coefficients) out.coefficients.push_back(c);
  for (const Rational& c : out.coefficients) {
    if (!c.is_zero()) {
      Rational inv = 1 / c;
      for (Rational& x : out.coefficients) x *= inv;
      return out;
    }
  }
  throw std::invalid_argument("cannot homogenize the zero form");
}

Poly form_to_poly(const LinearForm& l) {
  Poly p(l.nvars());
  for (int i = 0; i < l.nvars(); ++i) {
    if (l.coefficients[i].is_zero()) continue;
    Monomial m{std::vector<unsigned>(l.nvars(), 0)};
    m.exponents[i] = 1;
    p.add_term(m, l.coefficients[i]);
  }
  return p;
}

PowerIdeal face_ideal(const SimplicialComplex& complex,
                      const std::vector<Point>& gamma_points, int r) {
  if (r < 0) throw std::invalid_argument("smoothness must be nonnegative");
  const int k = complex.ambient_dim();
  std::set<std::vector<Rational>> seen;
  PowerIdeal ideal;
  ideal.exponent = r + 1;
  for (const Simplex& tau : complex.faces(k - 1)) {
    std::vector<Point> tau_points = complex.face_points(tau);
    if (!geometric_contains_points(tau_points, gamma_points)) continue;
    LinearForm form = homogenize(affine_span_form(tau_points));
    if (seen.insert(form.coefficients).second) {
      ideal.forms.push_back(std::move(form));
    }
  }
  return ideal;
}

PowerIdeal face_ideal(const SimplicialComplex& complex, const Simplex& gamma, int r) {
  return face_ideal(complex, complex.face_points(gamma), r);
}

long graded_dim_full(int nvars, long d) {
  if (d < 0 || nvars <= 0) return 0;
  // binomial(d + nvars - 1, nvars - 1), exact in long arithmetic
  long long value = 1;
  for (int i = 1; i <= nvars - 1; ++i) {
    value = value * (d + i) / i;
  }
  return static_cast<long>(value);
}

namespace {

/** Rows of { l^m * mu : l generator, deg(mu) = d - m } over the degree-d basis. */
QMatrix ideal_degree_matrix(const PowerIdeal& ideal, long d, int nvars,
                            const std::map<Monomial, std::size_t>& index) {
  const long m = ideal.exponent;
  auto multipliers = homogeneous_monomials(nvars, d - m);
  QMatrix rows(ideal.forms.size() * multipliers.size(), index.size());
  std::size_t row = 0;
  for (const LinearForm& l : ideal.forms) {
    Poly power = form_to_poly(l).pow(static_cast<unsigned>(m));
    for (const Monomial& mu : multipliers) {
      for (const auto& [mono, coeff] : power.terms()) {
        Monomial shifted = mono;
        for (int i = 0; i < nvars; ++i) shifted.exponents[i] += mu.exponents[i];
        rows(row, index.at(shifted)) = coeff;
      }
      ++row;
    }
  }
  return rows;
}

}  // namespace

long ideal_graded_dim(const PowerIdeal& ideal, long d, int nvars) {
  if (ideal.forms.empty() || d < ideal.exponent) return 0;
  if (ideal.forms.size() == 1) {
    return graded_dim_full(nvars, d - ideal.exponent);
  }
  auto basis = homogeneous_monomials(nvars, d);
  auto index = basis_index(basis);
  return static_cast<long>(rank(ideal_degree_matrix(ideal, d, nvars, index)));
}

long quotient_graded_dim(const PowerIdeal& ideal, long d, int nvars) {
  return graded_dim_full(nvars, d) - ideal_graded_dim(ideal, d, nvars);
}

bool ideals_equal(const PowerIdeal& a, const PowerIdeal& b) {
  if (a.exponent != b.exponent) {
    throw std::invalid_argument("ideals_equal: exponent mismatch");
  }
  if (a.forms.empty() || b.forms.empty()) {
    return a.forms.empty() && b.forms.empty();
  }
  const int nvars = a.forms[0].nvars();
  const long m = a.exponent;
  auto basis = homogeneous_monomials(nvars, m);
  auto index = basis_index(basis);
  auto power_rows = [&](const PowerIdeal& ideal) {
    QMatrix rows(ideal.forms.size(), basis.size());
    for (std::size_t i = 0; i < ideal.forms.size(); ++i) {
      Poly power = form_to_poly(ideal.forms[i]).pow(static_cast<unsigned>(m));
      for (const auto& [mono, coeff] : power.terms()) {
        rows(i, index.at(mono)) = coeff;
      }
    }
    return rows;
  };
  return row_space_equal(power_rows(a), power_rows(b));
}

long ChainComplexRJ::term_graded_dim(int i, long d) const {
  long total = 0;
  for (const Term& t : terms[i]) total += quotient_graded_dim(t.ideal, d, nvars);
  return total;
}

ChainComplexRJ build_chain_complex(const SimplicialComplex& complex, int r) {
  ValidationReport report = validate(complex);
  if (!report.ok()) {
    throw std::invalid_argument("chain complex over an invalid complex: " +
                                report.violations.front());
  }
  const int k = complex.ambient_dim();
  ChainComplexRJ chain;
  chain.k = k;
  chain.nvars = k + 1;
  chain.terms.resize(k + 1);
  chain.boundary.resize(k + 1);

  std::vector<std::map<Simplex, int>> position(k + 1);
  for (int i = 0; i <= k; ++i) {
    for (const Simplex& face : complex.interior_faces(i)) {
      position[i].emplace(face, static_cast<int>(chain.terms[i].size()));
      PowerIdeal ideal;
      if (i == k) {
        ideal.exponent = r + 1;  // zero ideal on the cell summands
      } else {
        ideal = face_ideal(complex, face, r);
      }
      chain.terms[i].push_back({face, std::move(ideal)});
    }
  }

  for (int i = 1; i <= k; ++i) {
    chain.boundary[i].resize(chain.terms[i].size());
    for (std::size_t f = 0; f < chain.terms[i].size(); ++f) {
      const Simplex& face = chain.terms[i][f].face;
      int sign = 1;
      for (std::size_t j = 0; j < face.vertices.size(); ++j) {
        Simplex sub;
        sub.vertices = face.vertices;
        sub.vertices.erase(sub.vertices.begin() + j);
        auto it = position[i - 1].find(sub);
        if (it != position[i - 1].end()) {
          chain.boundary[i][f].emplace_back(it->second, sign);
        }
        sign = -sign;
      }
    }
  }
  return chain;
}

namespace {

/** Degree-d quotient data for one term: pivots of the ideal piece and the
 *  monomial-complement basis, with the reduced rows kept for reductions. */
struct TermRealization {
  std::vector<int> pivot_row_of;   // full-basis index -> rref row, or -1
  std::vector<int> complement_pos; // full-basis index -> quotient coordinate, or -1
  std::vector<std::size_t> complement;  // quotient basis as full-basis indices
  QMatrix reduced;                 // rref rows of the ideal piece
};

TermRealization realize_term(const PowerIdeal& ideal, long d, int nvars,
                             const std::map<Monomial, std::size_t>& index) {
  TermRealization out;
  const std::size_t n = index.size();
  out.pivot_row_of.assign(n, -1);
  out.complement_pos.assign(n, -1);
  if (!ideal.forms.empty() && d >= ideal.exponent) {
    RrefResult r = rref(ideal_degree_matrix(ideal, d, nvars, index));
    out.reduced = std::move(r.reduced);
    for (std::size_t t = 0; t < r.pivot_cols.size(); ++t) {
      out.pivot_row_of[r.pivot_cols[t]] = static_cast<int>(t);
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (out.pivot_row_of[c] < 0) {
      out.complement_pos[c] = static_cast<int>(out.complement.size());
      out.complement.push_back(c);
    }
  }
  return out;
}

}  // namespace

GradedChainRealization realize_chain_degree(const ChainComplexRJ& chain, long d) {
  GradedChainRealization out;
  const int k = chain.k;
  auto basis = homogeneous_monomials(chain.nvars, d);
  auto index = basis_index(basis);

  std::vector<std::vector<TermRealization>> data(k + 1);
  std::vector<std::vector<long>> offsets(k + 1);
  out.term_dims.assign(k + 1, 0);
  for (int i = 0; i <= k; ++i) {
    long offset = 0;
    for (const auto& term : chain.terms[i]) {
      offsets[i].push_back(offset);
      data[i].push_back(realize_term(term.ideal, d, chain.nvars, index));
      offset += static_cast<long>(data[i].back().complement.size());
    }
    out.term_dims[i] = offset;
  }

  for (int i = 1; i <= k; ++i) {
    QMatrix m(out.term_dims[i - 1], out.term_dims[i]);
    for (std::size_t f = 0; f < chain.terms[i].size(); ++f) {
      const TermRealization& src = data[i][f];
      for (const auto& [target, sign] : chain.boundary[i][f]) {
        const TermRealization& dst = data[i - 1][target];
        const long row_base = offsets[i - 1][target];
        const long col_base = offsets[i][f];
        for (std::size_t c = 0; c < src.complement.size(); ++c) {
          const std::size_t mono = src.complement[c];
          if (dst.pivot_row_of[mono] >= 0) {
            // reduce the unit monomial against the target ideal piece
            const int row = dst.pivot_row_of[mono];
            for (std::size_t t = 0; t < dst.complement.size(); ++t) {
              const Rational& v = dst.reduced(row, dst.complement[t]);
              if (!v.is_zero()) {
                m(row_base + static_cast<long>(t), col_base + static_cast<long>(c)) -=
                    Rational(sign) * v;
              }
            }
          } else {
            m(row_base + dst.complement_pos[mono], col_base + static_cast<long>(c)) +=
                sign;
          }
        }
      }
    }
    out.boundaries.push_back(std::move(m));
  }
  return out;
}

std::vector<long> homology_graded_dims(const ChainComplexRJ& chain, long d) {
  GradedChainRealization real = realize_chain_degree(chain, d);
  const int k = chain.k;
  std::vector<long> ranks(k + 2, 0);  // ranks[i] = rank of d_i, i = 1..k
  for (int i = 1; i <= k; ++i) {
    ranks[i] = static_cast<long>(rank(real.boundaries[i - 1]));
  }
  std::vector<long> h(k + 1);
  for (int i = 0; i <= k; ++i) {
    h[i] = real.term_dims[i] - ranks[i] - ranks[i + 1];
  }
  return h;
}

std::vector<long> homology_graded_dims(const SimplicialComplex& complex, int r,
                                       long d) {
  return homology_graded_dims(build_chain_complex(complex, r), d);
}

long euler_dim(const ChainComplexRJ& chain, long d) {
  long total = 0;
  for (int i = 0; i <= chain.k; ++i) {
    long sign = (i % 2 == 0) ? 1 : -1;  // (-1)^i against index k - i
    total += sign * chain.term_graded_dim(chain.k - i, d);
  }
  return total;
}

long euler_dim(const SimplicialComplex& complex, int r, long d) {
  return euler_dim(build_chain_complex(complex, r), d);
}

}  // namespace splinedim
