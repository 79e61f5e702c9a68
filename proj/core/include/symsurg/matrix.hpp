#pragma once

#include "symsurg/integers.hpp"

#include <cstddef>
#include <initializer_list>

namespace symsurg {

// Dense matrix over Int, row-major. Small sizes only; clarity over speed.
class IntMat {
public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw input_error("matrix dimensions must be nonnegative");
  }
  IntMat(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[index(i, j)]; }
  const Int& at(int i, int j) const { return a_[index(i, j)]; }

  bool operator==(const IntMat& other) const = default;

  IntMat transpose() const;
  IntMat operator*(const IntMat& other) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  // Concatenates columns: [*this | right].
  IntMat hcat(const IntMat& right) const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  // row i += f * row j, col i += f * col j
  void add_row(int i, int j, const Int& f);
  void add_col(int i, int j, const Int& f);
  void negate_row(int i);

  // Exact determinant, Bareiss fraction-free elimination.
  Int det() const;

private:
  size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw input_error("matrix index out of range");
    return size_t(i) * cols_ + j;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

IntMat diagonal(const IntVec& entries);

} // namespace symsurg
