#include "symsurg/matrix.hpp"

#include <utility>

namespace symsurg {

IntMat::IntMat(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ ? int(rows.begin()->size()) : 0;
  a_.reserve(size_t(rows_) * cols_);
  for (const auto& r : rows) {
    if (int(r.size()) != cols_) throw input_error("ragged matrix literal");
    for (const auto& x : r) a_.push_back(x);
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& other) const {
  if (cols_ != other.rows_) throw input_error("matrix product shape mismatch");
  IntMat p(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& lhs = at(i, k);
      if (lhs == 0) continue;
      for (int j = 0; j < other.cols_; ++j) p.at(i, j) += lhs * other.at(k, j);
    }
  return p;
}

bool IntMat::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool IntMat::is_zero() const {
  for (const Int& x : a_)
    if (x != 0) return false;
  return true;
}

IntMat IntMat::hcat(const IntMat& right) const {
  if (rows_ != right.rows_) throw input_error("hcat row mismatch");
  IntMat m(rows_, cols_ + right.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < right.cols_; ++j) m.at(i, cols_ + j) = right.at(i, j);
  }
  return m;
}

void IntMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMat::add_row(int i, int j, const Int& f) {
  for (int k = 0; k < cols_; ++k) at(i, k) += f * at(j, k);
}

void IntMat::add_col(int i, int j, const Int& f) {
  for (int k = 0; k < rows_; ++k) at(k, i) += f * at(k, j);
}

void IntMat::negate_row(int i) {
  for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

Int IntMat::det() const {
  if (!is_square()) throw input_error("determinant needs a square matrix");
  int n = rows_;
  if (n == 0) return 1;
  IntMat m = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      m.swap_rows(k, pivot);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        // Bareiss: division by the previous pivot is exact
        m.at(i, j) = num / prev;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

IntMat diagonal(const IntVec& entries) {
  IntMat m(int(entries.size()), int(entries.size()));
  for (int i = 0; i < int(entries.size()); ++i) m.at(i, i) = entries[i];
  return m;
}

} // namespace symsurg
