// Minimal dense row-major matrix of doubles. Covers cost matrices, feature
// blocks, and model weights; nothing fancier than the project needs.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "startdet/types.hpp"

namespace startdet {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols),
        v_(static_cast<size_t>(rows < 0 ? 0 : rows) * (cols < 0 ? 0 : cols),
           fill) {
    if (rows < 0 || cols < 0)
      throw InvalidInputError("Matrix dimensions must be non-negative");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return v_.empty(); }

  double operator()(int r, int c) const {
    return v_[static_cast<size_t>(r) * cols_ + c];
  }
  double& operator()(int r, int c) {
    return v_[static_cast<size_t>(r) * cols_ + c];
  }

  const double* row(int r) const { return v_.data() + static_cast<size_t>(r) * cols_; }
  double* row(int r) { return v_.data() + static_cast<size_t>(r) * cols_; }

  std::span<const double> values() const { return v_; }
  std::span<double> values() { return v_; }

  void fill(double x) { std::fill(v_.begin(), v_.end(), x); }

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> v_;
};

}  // namespace startdet
