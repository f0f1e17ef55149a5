#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace bicseek {

/// Dense row-major matrix of 64-bit reals with row/column labels.
///
/// Labels exist only for file round-tripping; every algorithm works on
/// 0-based positions. Values must be finite; construction rejects NaN/Inf.
class ExpressionMatrix {
 public:
  ExpressionMatrix() = default;

  /// Zero-filled matrix with generated labels (r0.., c0..).
  ExpressionMatrix(std::size_t rows, std::size_t cols);

  ExpressionMatrix(std::vector<double> values, std::size_t rows, std::size_t cols,
                   std::vector<std::string> row_labels, std::vector<std::string> col_labels);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }

  const double* row_data(std::size_t r) const { return values_.data() + r * cols_; }
  const std::vector<double>& values() const { return values_; }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

 private:
  void validate() const;

  std::vector<double> values_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

std::vector<std::string> default_labels(char prefix, std::size_t n);

}  // namespace bicseek
