#include "akform/qmatrix.hpp"

#include <stdexcept>

namespace akform {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw std::invalid_argument("qmatrix: ragged row list");
    }
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("qmatrix: size mismatch in product");
  QMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t l = 0; l < cols_; ++l) {
      const Rational& x = at(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        p.at(i, j) += x * o.at(l, j);
      }
    }
  }
  return p;
}

QVector QMatrix::apply(const QVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("qmatrix: size mismatch in apply");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

QMatrix QMatrix::scale_rows(const QVector& d) const {
  if (d.size() != rows_) throw std::invalid_argument("qmatrix: diagonal size mismatch");
  QMatrix m(*this);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) *= d[i];
  return m;
}

QMatrix QMatrix::scale_cols(const QVector& d) const {
  if (d.size() != cols_) throw std::invalid_argument("qmatrix: diagonal size mismatch");
  QMatrix m(*this);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) *= d[j];
  return m;
}

bool QMatrix::is_zero() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

RrefResult rref(const QMatrix& m) {
  QMatrix r(m);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < r.rows() && r.at(pivot, col).is_zero()) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < r.cols(); ++j)
        std::swap(r.at(pivot, j), r.at(row, j));
    }
    const Rational inv = inverse(r.at(row, col));
    for (std::size_t j = col; j < r.cols(); ++j) r.at(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r.at(i, col).is_zero()) continue;
      const Rational f = r.at(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) {
        r.at(i, j) -= f * r.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

std::vector<QVector> kernel_basis(const QMatrix& m) {
  const auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    QVector v(m.cols());
    v[free_col] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -r.at(i, free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("qmatrix: rhs length does not match row count");
  }
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  const auto [r, pivots] = rref(aug);
  for (auto p : pivots) {
    if (p == m.cols()) return std::nullopt;  // pivot in the augmented column
  }
  QVector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    x[pivots[i]] = r.at(i, m.cols());
  }
  return x;
}

}  // namespace akform
