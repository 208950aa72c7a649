#include "splinedim/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace splinedim {

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial{std::vector<unsigned>(nvars, 0)}, c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  Poly p(nvars);
  Monomial m{std::vector<unsigned>(nvars, 0)};
  m.exponents[index] = 1;
  p.add_term(m, 1);
  return p;
}

Poly Poly::linear(const std::vector<Rational>& coeffs, const Rational& c0) {
  Poly p(static_cast<int>(coeffs.size()));
  p.add_term(Monomial{std::vector<unsigned>(coeffs.size(), 0)}, c0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m{std::vector<unsigned>(coeffs.size(), 0)};
    m.exponents[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(m.exponents.size()) != nvars_) {
    throw std::invalid_argument("monomial variable count mismatch");
  }
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::operator+(const Poly& rhs) const {
  Poly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& rhs) const {
  Poly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::operator*(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_) {
    throw std::invalid_argument("polynomial variable count mismatch");
  }
  Poly out(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m = ma;
      for (int i = 0; i < nvars_; ++i) m.exponents[i] += mb.exponents[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Poly Poly::operator*(const Rational& c) const {
  Poly out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly out = Poly::constant(nvars_, 1);
  for (unsigned i = 0; i < e; ++i) out = out * (*this);
  return out;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) {
    throw std::invalid_argument("evaluation point dimension mismatch");
  }
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < nvars_; ++i) {
      for (unsigned e = 0; e < m.exponents[i]; ++e) v *= point[i];
    }
    total += v;
  }
  return total;
}

std::string Poly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    if (!first) {
      out << (coeff > 0 ? " + " : " - ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (m.exponents[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_names.empty() ? ("x" + std::to_string(i)) : var_names[i];
      if (m.exponents[i] > 1) mono += "^" + std::to_string(m.exponents[i]);
    }
    if (mono.empty()) {
      out << format_rational(coeff);
    } else if (coeff == 1) {
      out << mono;
    } else if (coeff == -1) {
      out << "-" << mono;
    } else {
      out << format_rational(coeff) << "*" << mono;
    }
  }
  return out.str();
}

namespace {

void enumerate_monomials(int nvars, long d, int var, Monomial& current,
                         std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    current.exponents[var] = static_cast<unsigned>(d);
    out.push_back(current);
    current.exponents[var] = 0;
    return;
  }
  for (long e = d; e >= 0; --e) {
    current.exponents[var] = static_cast<unsigned>(e);
    enumerate_monomials(nvars, d - e, var + 1, current, out);
  }
  current.exponents[var] = 0;
}

}  // namespace

std::vector<Monomial> homogeneous_monomials(int nvars, long d) {
  std::vector<Monomial> out;
  if (nvars <= 0 || d < 0) return out;
  Monomial current{std::vector<unsigned>(nvars, 0)};
  enumerate_monomials(nvars, d, 0, current, out);
  return out;
}

std::vector<Monomial> monomials_up_to(int nvars, long d) {
  std::vector<Monomial> out;
  for (long t = 0; t <= d; ++t) {
    auto part = homogeneous_monomials(nvars, t);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::map<Monomial, std::size_t> basis_index(const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  return index;
}

std::vector<Rational> coefficient_vector(
    const Poly& p, const std::map<Monomial, std::size_t>& index) {
  std::vector<Rational> v(index.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = index.find(m);
    if (it == index.end()) {
      throw std::invalid_argument("polynomial term outside the monomial basis");
    }
    v[it->second] = c;
  }
  return v;
}

std::pair<Poly, Poly> divide_by_linear(const Poly& p, const Poly& divisor, int var) {
  if (divisor.nvars() != p.nvars()) {
    throw std::invalid_argument("divide_by_linear: variable count mismatch");
  }
  Monomial lead{std::vector<unsigned>(p.nvars(), 0)};
  lead.exponents[var] = 1;
  const Rational lead_coeff = divisor.coefficient(lead);
  if (lead_coeff.is_zero()) {
    throw std::invalid_argument("divisor has no x_var term");
  }
  for (const auto& [m, c] : divisor.terms()) {
    if (m.exponents[var] > 1) {
      throw std::invalid_argument("divisor is not linear in x_var");
    }
  }
  Poly quotient(p.nvars());
  Poly rem = p;
  while (true) {
    // highest x_var exponent present in the remainder
    unsigned top = 0;
    for (const auto& [m, c] : rem.terms()) top = std::max(top, m.exponents[var]);
    if (top == 0) break;
    // slice of terms with x_var exponent == top, divided by x_var^top
    Poly slice(p.nvars());
    for (const auto& [m, c] : rem.terms()) {
      if (m.exponents[var] == top) {
        Monomial reduced = m;
        reduced.exponents[var] = 0;
        slice.add_term(reduced, c);
      }
    }
    // q_step = slice / lead_coeff * x_var^(top-1)
    Poly q_step(p.nvars());
    for (const auto& [m, c] : slice.terms()) {
      Monomial shifted = m;
      shifted.exponents[var] = top - 1;
      q_step.add_term(shifted, c / lead_coeff);
    }
    quotient = quotient + q_step;
    rem = rem - q_step * divisor;
  }
  return {quotient, rem};
}

bool divisible_by_power(const Poly& p, const Poly& divisor, int var, unsigned power) {
  Poly current = p;
  for (unsigned i = 0; i < power; ++i) {
    if (current.is_zero()) return true;
    auto [q, rem] = divide_by_linear(current, divisor, var);
    if (!rem.is_zero()) return false;
    current = q;
  }
  return true;
}

}  // namespace splinedim
