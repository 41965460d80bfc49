#ifndef MADM_MATRIX_HPP
#define MADM_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace madm {

/// Dense row-major matrix of doubles. Rows are alternatives, columns criteria.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  [[nodiscard]] std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  [[nodiscard]] std::vector<double> column(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void set_column(std::size_t c, std::span<const double> values) {
    assert(values.size() == rows_);
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
  }

  /// Rows listed in `keep`, in that order.
  [[nodiscard]] Matrix select_rows(std::span<const std::size_t> keep) const {
    Matrix out(keep.size(), cols_);
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(keep[i], c);
    return out;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace madm

#endif  // MADM_MATRIX_HPP
