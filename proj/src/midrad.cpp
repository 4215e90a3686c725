#include "sobolev/midrad.hpp"

#include <algorithm>

#include "sobolev/parallel.hpp"
#include "sobolev/simd/dot.hpp"

namespace sobolev {

void to_midrad(const Interval& x, double& mid, double& rad) {
  mid = x.mid();
  rad = x.rad();
}

MidRadMatrix::MidRadMatrix(const IMatrix& a) : MidRadMatrix(a.rows(), a.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) set(i, j, a(i, j));
}

MidRadMatrix MidRadMatrix::point(std::size_t rows, std::size_t cols, std::vector<double> values) {
  if (values.size() != rows * cols) throw DomainError("point matrix size mismatch");
  MidRadMatrix m(rows, cols);
  m.mid_ = std::move(values);
  return m;
}

bool MidRadMatrix::is_point() const {
  return std::all_of(rad_.begin(), rad_.end(), [](double r) { return r == 0.0; });
}

void MidRadMatrix::set(std::size_t i, std::size_t j, const Interval& x) {
  to_midrad(x, mid_[i * cols_ + j], rad_[i * cols_ + j]);
}

Interval MidRadMatrix::entry(std::size_t i, std::size_t j) const {
  const double m = mid(i, j), r = rad(i, j);
  return Interval(rnd::sub_down(m, r), rnd::add_up(m, r));
}

MidRadMatrix MidRadMatrix::transposed() const {
  MidRadMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      t.mid_[j * rows_ + i] = mid(i, j);
      t.rad_[j * rows_ + i] = rad(i, j);
    }
  }
  return t;
}

IMatrix multiply_abt(const MidRadMatrix& a, const MidRadMatrix& bt) {
  if (a.cols() != bt.cols()) throw DomainError("matrix product dimension mismatch");
  const bool ar = !a.is_point(), br = !bt.is_point();
  const std::size_t k = a.cols();
  IMatrix out(a.rows(), bt.rows());
  parallel_for(a.rows(), [&](std::size_t i) {
    for (std::size_t j = 0; j < bt.rows(); ++j) {
      out(i, j) = simd::dot(a.mid_row(i), ar ? a.rad_row(i) : nullptr, bt.mid_row(j),
                            br ? bt.rad_row(j) : nullptr, k);
    }
  });
  return out;
}

}  // namespace sobolev
