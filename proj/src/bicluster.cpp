#include "bicseek/bicluster.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicseek {

void Chromosome::validate(std::size_t num_cols) const {
  if (columns.size() < 2) throw std::invalid_argument("Chromosome: needs at least 2 columns");
  std::vector<std::size_t> sorted = columns;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("Chromosome: duplicate column index");
  if (sorted.back() >= num_cols) throw std::invalid_argument("Chromosome: column index out of range");
}

std::uint64_t chromosome_hash(const Chromosome& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t col : c.columns) {
    std::uint64_t w = static_cast<std::uint64_t>(col);
    for (int b = 0; b < 8; ++b) {
      h ^= (w >> (8 * b)) & 0xffULL;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

Bicluster::Bicluster(std::vector<std::size_t> row_set, std::vector<std::size_t> col_set)
    : rows(std::move(row_set)), cols(std::move(col_set)) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  if (rows.empty() || cols.empty()) throw std::invalid_argument("Bicluster: empty row or column set");
}

void Bicluster::validate(std::size_t num_rows, std::size_t num_cols) const {
  if (rows.empty() || cols.empty()) throw std::invalid_argument("Bicluster: empty row or column set");
  if (rows.back() >= num_rows) throw std::invalid_argument("Bicluster: row index out of range");
  if (cols.back() >= num_cols) throw std::invalid_argument("Bicluster: column index out of range");
}

std::vector<std::pair<std::size_t, std::size_t>> bicluster_cells(const Bicluster& b) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  cells.reserve(b.cell_count());
  for (std::size_t r : b.rows)
    for (std::size_t c : b.cols) cells.emplace_back(r, c);
  return cells;
}

std::size_t sorted_intersection_size(const std::vector<std::size_t>& a,
                                     const std::vector<std::size_t>& b) {
  std::size_t n = 0, i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (b[j] < a[i])
      ++j;
    else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

std::size_t cell_intersection_size(const Bicluster& a, const Bicluster& b) {
  return sorted_intersection_size(a.rows, b.rows) * sorted_intersection_size(a.cols, b.cols);
}

double cell_jaccard(const Bicluster& a, const Bicluster& b) {
  const std::size_t inter = cell_intersection_size(a, b);
  const std::size_t uni = a.cell_count() + b.cell_count() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

double row_jaccard(const Bicluster& a, const Bicluster& b) {
  const std::size_t inter = sorted_intersection_size(a.rows, b.rows);
  const std::size_t uni = a.rows.size() + b.rows.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace bicseek
