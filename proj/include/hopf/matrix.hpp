#pragma once

#include <cassert>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hopf/rational.hpp"

namespace hopf {

/// Dense rational matrix, row-major. Sized at construction.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == cols);
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const {
    return QVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  QVector col(std::size_t c) const {
    QVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
  }
  void set_row(std::size_t r, const QVector& v) {
    assert(v.size() == cols_);
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = v[j];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const QMatrix& o) const { return !(*this == o); }
  bool operator<(const QMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (std::size_t i = 0; i < data_.size(); ++i) {
      int c = cmp(data_[i], o.data_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  QMatrix operator*(const QMatrix& o) const {
    assert(cols_ == o.rows_);
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(i, k) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }

  QVector operator*(const QVector& v) const {
    assert(v.size() == cols_);
    QVector r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
  }

  QMatrix operator+(const QMatrix& o) const {
    QMatrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }
  QMatrix operator-(const QMatrix& o) const {
    QMatrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }
  QMatrix scaled(const Rat& c) const {
    QMatrix r(*this);
    for (auto& x : r.data_) x *= c;
    return r;
  }

  QMatrix transposed() const {
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << rat_str(at(i, j));
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

/// In-place Gauss-Jordan to reduced row echelon form. Returns pivot columns.
inline std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t r = 0; r < m.rows() && lead < m.cols(); ++r) {
    std::size_t i = r;
    while (i < m.rows() && m.at(i, lead) == 0) ++i;
    if (i == m.rows()) {
      ++lead;
      --r;
      continue;
    }
    if (i != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(i, j), m.at(r, j));
    Rat inv = 1 / m.at(r, lead);
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t k = 0; k < m.rows(); ++k) {
      if (k == r || m.at(k, lead) == 0) continue;
      Rat f = m.at(k, lead);
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(k, j) -= f * m.at(r, j);
    }
    pivots.push_back(lead);
    ++lead;
  }
  return pivots;
}

/// Canonical basis of the right nullspace {x : m x = 0}, as rref rows.
inline std::vector<QVector> nullspace(QMatrix m) {
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    QVector v(m.cols(), Rat(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free_col);
    basis.push_back(v);
  }
  QMatrix b = QMatrix::from_rows(basis, m.cols());
  rref(b);
  std::vector<QVector> out;
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (!qvec_is_zero(b.row(i))) out.push_back(b.row(i));
  return out;
}

inline std::optional<QMatrix> inverse(const QMatrix& a) {
  assert(a.rows() == a.cols());
  std::size_t n = a.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

/// One solution of a x = b, if consistent.
inline std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  QVector x(a.cols(), Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

/// Subspace of Q^n in canonical form: rref basis rows, no zero rows.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span_of(const std::vector<QVector>& vectors, std::size_t ambient) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    QMatrix m = QMatrix::from_rows(vectors, ambient);
    rref(m);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!qvec_is_zero(m.row(i))) s.basis_.push_back(m.row(i));
    return s;
  }

  static Subspace full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
      QVector v(ambient, Rat(0));
      v[i] = 1;
      s.basis_.push_back(v);
    }
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVector>& basis() const { return basis_; }

  bool contains(const QVector& v) const {
    QVector r = reduce(v);
    return qvec_is_zero(r);
  }

  bool contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Remainder of v after reduction by the echelon basis.
  QVector reduce(const QVector& v) const {
    QVector r = v;
    for (const auto& b : basis_) {
      std::size_t p = 0;
      while (p < ambient_ && b[p] == 0) ++p;
      if (p < ambient_ && r[p] != 0) {
        Rat f = r[p];
        for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * b[j];
      }
    }
    return r;
  }

  Subspace sum(const Subspace& o) const {
    std::vector<QVector> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span_of(all, ambient_);
  }

 private:
  std::size_t ambient_;
  std::vector<QVector> basis_;
};

}  // namespace hopf
