#include "splinedim/linalg.hpp"

#include <cctype>
#include <stdexcept>

namespace splinedim {

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = (text[pos] == '-');
    ++pos;
  }
  auto read_digits = [&](std::string& out) {
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out.push_back(text[pos++]);
    }
  };
  std::string integer_part;
  read_digits(integer_part);
  if (integer_part.empty()) return fail();

  BigInt num(integer_part);
  BigInt den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::string den_part;
    read_digits(den_part);
    if (den_part.empty() || pos != text.size()) return fail();
    den = BigInt(den_part);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::string frac_part;
    read_digits(frac_part);
    if (frac_part.empty() || pos != text.size()) return fail();
    for (char c : frac_part) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else if (pos != text.size()) {
    return fail();
  }
  Rational value(num, den);
  if (negative) value = -value;
  return value;
}

std::string format_rational(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/" + denominator(q).str();
  }
  return s;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows()) {
    throw std::invalid_argument("matrix product shape mismatch");
  }
  QMatrix out(rows_, rhs.cols());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t t = 0; t < cols_; ++t) {
      const Rational& a = (*this)(i, t);
      if (a.is_zero()) continue;
      const Rational* rrow = rhs.row_data(t);
      Rational* orow = out.row_data(i);
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        if (!rrow[j].is_zero()) orow[j] += a * rrow[j];
      }
    }
  }
  return out;
}

bool QMatrix::is_zero() const {
  for (const Rational& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

RrefResult rref(const QMatrix& m) {
  RrefResult res;
  res.reduced = m;
  QMatrix& a = res.reduced;
  const std::size_t nrows = a.rows(), ncols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < nrows; ++col) {
    std::size_t sel = nrows;
    for (std::size_t i = pivot_row; i < nrows; ++i) {
      if (!a(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == nrows) continue;
    if (sel != pivot_row) {
      Rational* r1 = a.row_data(sel);
      Rational* r2 = a.row_data(pivot_row);
      for (std::size_t j = 0; j < ncols; ++j) r1[j].swap(r2[j]);
    }
    Rational* prow = a.row_data(pivot_row);
    if (prow[col] != 1) {
      Rational inv = 1 / prow[col];
      for (std::size_t j = col; j < ncols; ++j) {
        if (!prow[j].is_zero()) prow[j] *= inv;
      }
    }
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == pivot_row) continue;
      Rational& f = a(i, col);
      if (f.is_zero()) continue;
      Rational factor = f;
      Rational* row = a.row_data(i);
      for (std::size_t j = col; j < ncols; ++j) {
        if (!prow[j].is_zero()) row[j] -= factor * prow[j];
      }
    }
    res.pivot_cols.push_back(col);
    ++pivot_row;
  }
  res.rank = res.pivot_cols.size();
  return res;
}

namespace {

using IntRow = std::vector<BigInt>;

/** Divide a row by the gcd of its entries (content), keeping it primitive. */
void make_primitive(IntRow& row, std::size_t from) {
  BigInt g = 0;
  for (std::size_t j = from; j < row.size(); ++j) {
    if (row[j] != 0) {
      g = boost::multiprecision::gcd(g, row[j]);
      if (g == 1) return;
    }
  }
  if (g == 0 || g == 1) return;
  for (std::size_t j = from; j < row.size(); ++j) {
    if (row[j] != 0) row[j] /= g;
  }
}

/** Rational row scaled to a primitive integer vector (rank is unaffected). */
IntRow to_primitive_integer_row(const Rational* src, std::size_t cols) {
  BigInt scale = 1;
  for (std::size_t j = 0; j < cols; ++j) {
    if (!src[j].is_zero()) {
      scale = boost::multiprecision::lcm(scale, denominator(src[j]));
    }
  }
  IntRow row(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    if (!src[j].is_zero()) {
      row[j] = numerator(src[j]) * (scale / denominator(src[j]));
    }
  }
  make_primitive(row, 0);
  return row;
}

}  // namespace

std::size_t rank(const QMatrix& m) {
  // Fraction-free incremental elimination over primitive integer rows; much
  // faster than rational arithmetic since no per-operation canonicalization
  // happens, and content reduction keeps entry growth in check.
  const std::size_t cols = m.cols();
  std::map<std::size_t, IntRow> echelon;  // lead column -> primitive row
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (echelon.size() == cols) break;
    IntRow row = to_primitive_integer_row(m.row_data(i), cols);
    std::size_t lead = 0;
    while (lead < cols && row[lead] == 0) ++lead;
    while (lead < cols) {
      auto it = echelon.find(lead);
      if (it == echelon.end()) {
        echelon.emplace(lead, std::move(row));
        break;
      }
      const IntRow& e = it->second;
      const BigInt g = boost::multiprecision::gcd(e[lead], row[lead]);
      const BigInt fe = row[lead] / g;
      const BigInt fr = e[lead] / g;
      row[lead] = 0;
      for (std::size_t j = lead + 1; j < cols; ++j) {
        if (e[j] != 0) {
          row[j] = fr * row[j] - fe * e[j];
        } else if (row[j] != 0 && fr != 1) {
          row[j] *= fr;
        }
      }
      while (lead < cols && row[lead] == 0) ++lead;
      make_primitive(row, lead);
    }
  }
  return echelon.size();
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
  RrefResult r = rref(m);
  const std::size_t ncols = m.cols();
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t p : r.pivot_cols) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(ncols);
    v[free_col] = 1;
    for (std::size_t t = 0; t < r.pivot_cols.size(); ++t) {
      v[r.pivot_cols[t]] = -r.reduced(t, free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool row_space_equal(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("row_space_equal: column count mismatch");
  }
  RrefResult ra = rref(a);
  RrefResult rb = rref(b);
  if (ra.rank != rb.rank) return false;
  for (std::size_t i = 0; i < ra.rank; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (ra.reduced(i, j) != rb.reduced(i, j)) return false;
    }
  }
  return true;
}

std::optional<std::vector<Rational>> solve_unique(const QMatrix& a,
                                                  const std::vector<Rational>& b) {
  if (b.size() != a.rows()) {
    throw std::invalid_argument("solve_unique: rhs length mismatch");
  }
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  for (std::size_t p : r.pivot_cols) {
    if (p == a.cols()) return std::nullopt;  // inconsistent
  }
  if (r.rank != a.cols()) return std::nullopt;  // not unique
  std::vector<Rational> x(a.cols());
  for (std::size_t t = 0; t < r.rank; ++t) {
    x[r.pivot_cols[t]] = r.reduced(t, a.cols());
  }
  return x;
}

}  // namespace splinedim
