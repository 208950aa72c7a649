#ifndef SPLINEDIM_POLY_HPP
#define SPLINEDIM_POLY_HPP

#include <map>
#include <vector>

#include "splinedim/rational.hpp"

namespace splinedim {

/** Exponent tuple over a fixed number of variables. */
struct Monomial {
  std::vector<unsigned> exponents;

  unsigned degree() const {
    unsigned d = 0;
    for (unsigned e : exponents) d += e;
    return d;
  }
  auto operator<=>(const Monomial&) const = default;
};

/**
 * Sparse multivariate polynomial with exact rational coefficients over a
 * declared variable count. Zero coefficients are never stored.
 */
class Poly {
 public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);
  /** Linear polynomial c0 + sum coeffs[i] * x_i. */
  static Poly linear(const std::vector<Rational>& coeffs, const Rational& c0);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  unsigned degree() const;

  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly operator*(const Rational& c) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly&) const = default;

  /** Evaluate at a rational point (size must equal nvars). */
  Rational evaluate(const std::vector<Rational>& point) const;

  std::string to_string(const std::vector<std::string>& var_names = {}) const;

 private:
  int nvars_;
  std::map<Monomial, Rational> terms_;
};

/** All monomials of exact degree d in nvars variables, lexicographic order. */
std::vector<Monomial> homogeneous_monomials(int nvars, long d);

/** All monomials of degree <= d, ascending degree then lexicographic. */
std::vector<Monomial> monomials_up_to(int nvars, long d);

/** Coefficient vector of p relative to an ordered monomial basis.
 *  @throws std::invalid_argument if p has a term outside the basis. */
std::vector<Rational> coefficient_vector(const Poly& p,
                                         const std::map<Monomial, std::size_t>& index);

std::map<Monomial, std::size_t> basis_index(const std::vector<Monomial>& basis);

/**
 * Division with remainder by a polynomial of degree one in the variable
 * `var` (divisor must have a nonzero coefficient on x_var). Returns
 * (quotient, remainder) with remainder of degree zero in x_var, so
 * p = q * divisor + rem exactly.
 */
std::pair<Poly, Poly> divide_by_linear(const Poly& p, const Poly& divisor, int var);

/** True iff p is exactly divisible by divisor^power (divisor linear in x_var). */
bool divisible_by_power(const Poly& p, const Poly& divisor, int var, unsigned power);

}  // namespace splinedim

#endif
