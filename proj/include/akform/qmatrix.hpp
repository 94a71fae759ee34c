#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "akform/rational.hpp"

namespace akform {

using QVector = std::vector<Rational>;

/// Dense exact-rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& o) const;
  QVector apply(const QVector& v) const;

  /// diag(d) * M; d.size() == rows().
  QMatrix scale_rows(const QVector& d) const;
  /// M * diag(d); d.size() == cols().
  QMatrix scale_cols(const QVector& d) const;

  bool is_zero() const;
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  QVector a_;
};

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column indices, increasing
};

/// Reduced row-echelon form over the rationals, exact.
RrefResult rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Basis of the exact null space; count == cols - rank. Each vector has a
/// leading 1 in its free coordinate (one per non-pivot column, in column
/// order).
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Exact solve of M x = b with free variables set to zero; nullopt when the
/// system is inconsistent. Throws std::invalid_argument on dimension
/// mismatch.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

}  // namespace akform
