// Exact integer matrices and Smith normal form with unimodular transforms.
#pragma once

#include <vector>

#include "ordalib/ints.hpp"

namespace ordalib {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Int(0)) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  Int determinant() const;  // fraction-free Bareiss elimination

  bool operator==(const IntMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

struct SmithNormalForm {
  std::vector<Int> diagonal;  // d_1 | d_2 | ..., all >= 0
  IntMatrix left;             // U, rows x rows, unimodular
  IntMatrix right;            // V, cols x cols, unimodular; U * A * V = diag
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

}  // namespace ordalib
