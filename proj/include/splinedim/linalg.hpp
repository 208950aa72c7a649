#ifndef SPLINEDIM_LINALG_HPP
#define SPLINEDIM_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "splinedim/rational.hpp"

namespace splinedim {

/**
 * Dense matrix of exact rationals. Row-major storage; rows x cols entries
 * are always present. Values are immutable in all library call paths once
 * a matrix has been handed to an operation.
 */
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  /** Pointer to the start of row i. */
  Rational* row_data(std::size_t i) { return data_.data() + i * cols_; }
  const Rational* row_data(std::size_t i) const {
    return data_.data() + i * cols_;
  }

  bool operator==(const QMatrix&) const = default;

  QMatrix operator*(const QMatrix& rhs) const;

  /** True if every entry is zero. */
  bool is_zero() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/**
 * Reduced row echelon form with the deterministic pivot rule: columns are
 * scanned left to right and the first row with a nonzero entry supplies the
 * pivot. The result is the unique RREF of the row space.
 */
RrefResult rref(const QMatrix& m);

/**
 * Rank only. Same answer as rref(m).rank but cheaper: forward elimination,
 * no back-substitution, rows processed incrementally.
 */
std::size_t rank(const QMatrix& m);

/**
 * Basis of the right null space, echelonized deterministically: one vector
 * per non-pivot column j, with entry 1 at j and zeros at the other free
 * columns. Count is always cols - rank.
 */
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

/**
 * Whether the row spans of a and b coincide as subspaces, decided by
 * comparing reduced row echelon forms.
 *
 * @throws std::invalid_argument if the column counts differ.
 */
bool row_space_equal(const QMatrix& a, const QMatrix& b);

/**
 * Exact solution of A x = b when it exists and is unique (A must have full
 * column rank for uniqueness; inconsistent or underdetermined systems give
 * std::nullopt).
 */
std::optional<std::vector<Rational>> solve_unique(const QMatrix& a,
                                                  const std::vector<Rational>& b);

}  // namespace splinedim

#endif
