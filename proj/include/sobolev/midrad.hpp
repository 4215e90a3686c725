#pragma once

#include <cstddef>
#include <vector>

#include "sobolev/interval.hpp"

namespace sobolev {

/// Dense row-major matrix of intervals.
class IMatrix {
 public:
  IMatrix() = default;
  IMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Interval& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Interval& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Interval>& data() const { return data_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Interval> data_;
};

/// Midpoint-radius form of a row-major matrix: every entry x of the source
/// interval satisfies |x - mid| <= rad. A matrix with all radii zero is
/// flagged as a point matrix and the kernels skip the radius work.
class MidRadMatrix {
 public:
  MidRadMatrix() = default;
  MidRadMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), mid_(rows * cols, 0.0), rad_(rows * cols, 0.0) {}
  explicit MidRadMatrix(const IMatrix& a);
  /// Point matrix from plain doubles (row-major).
  static MidRadMatrix point(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_point() const;
  void set(std::size_t i, std::size_t j, const Interval& x);
  void set_point(std::size_t i, std::size_t j, double x) { mid_[i * cols_ + j] = x; rad_[i * cols_ + j] = 0.0; }
  double mid(std::size_t i, std::size_t j) const { return mid_[i * cols_ + j]; }
  double rad(std::size_t i, std::size_t j) const { return rad_[i * cols_ + j]; }
  const double* mid_row(std::size_t i) const { return mid_.data() + i * cols_; }
  const double* rad_row(std::size_t i) const { return rad_.data() + i * cols_; }
  Interval entry(std::size_t i, std::size_t j) const;
  MidRadMatrix transposed() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> mid_, rad_;
};

void to_midrad(const Interval& x, double& mid, double& rad);

/// Enclosure of A * B^T where `bt` stores B^T row-major (so both operands
/// are traversed along contiguous rows).
IMatrix multiply_abt(const MidRadMatrix& a, const MidRadMatrix& bt);

}  // namespace sobolev
