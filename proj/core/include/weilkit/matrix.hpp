#pragma once

#include <vector>

#include "weilkit/integer.hpp"

namespace weilkit {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Integer(0)) {}
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, int cols);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Integer& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  std::vector<Integer> row(int r) const;
  std::vector<std::vector<Integer>> to_rows() const;
  void append_row(const std::vector<Integer>& r);
  void swap_rows(int a, int b);
  IntMatrix transposed() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

/// Bareiss fraction-free determinant.
Integer determinant(IntMatrix m);

/// Rank over Q.
int rank(IntMatrix m);

/// Row Hermite normal form of the row lattice: zero rows dropped, pivots
/// positive, entries above a pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix m);

/// Nonzero diagonal entries of the Smith normal form, each dividing the next.
std::vector<Integer> smith_diagonal(IntMatrix m);

/// Rows form a basis of the integer kernel {x in Z^cols : A x = 0}, in HNF.
IntMatrix integer_kernel(const IntMatrix& a);

/// Reduce v modulo the row lattice of an HNF basis; zero iff v is in the lattice.
std::vector<Integer> reduce_by_hnf(std::vector<Integer> v, const IntMatrix& hnf);
bool in_row_lattice(const std::vector<Integer>& v, const IntMatrix& hnf);

}  // namespace weilkit
