#include "bicseek/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace bicseek {

std::vector<std::string> default_labels(char prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

ExpressionMatrix::ExpressionMatrix(std::size_t rows, std::size_t cols)
    : values_(rows * cols, 0.0),
      rows_(rows),
      cols_(cols),
      row_labels_(default_labels('r', rows)),
      col_labels_(default_labels('c', cols)) {}

ExpressionMatrix::ExpressionMatrix(std::vector<double> values, std::size_t rows, std::size_t cols,
                                   std::vector<std::string> row_labels,
                                   std::vector<std::string> col_labels)
    : values_(std::move(values)),
      rows_(rows),
      cols_(cols),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  validate();
}

void ExpressionMatrix::validate() const {
  if (values_.size() != rows_ * cols_)
    throw std::invalid_argument("ExpressionMatrix: value count does not match rows*cols");
  if (row_labels_.size() != rows_)
    throw std::invalid_argument("ExpressionMatrix: row label count does not match rows");
  if (col_labels_.size() != cols_)
    throw std::invalid_argument("ExpressionMatrix: column label count does not match cols");
  for (double v : values_)
    if (!std::isfinite(v)) throw std::invalid_argument("ExpressionMatrix: non-finite value");
  std::unordered_set<std::string> seen;
  for (const auto& l : row_labels_)
    if (!seen.insert(l).second) throw std::invalid_argument("ExpressionMatrix: duplicate row label '" + l + "'");
  seen.clear();
  for (const auto& l : col_labels_)
    if (!seen.insert(l).second)
      throw std::invalid_argument("ExpressionMatrix: duplicate column label '" + l + "'");
}

}  // namespace bicseek
