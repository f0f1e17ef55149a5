#include "bicseek/metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace bicseek {

namespace {

std::uint64_t pack_cell(std::size_t r, std::size_t c) {
  return (static_cast<std::uint64_t>(r) << 32) | static_cast<std::uint64_t>(c);
}

void insert_cells(std::unordered_set<std::uint64_t>& cells, const BiclusterSet& set) {
  for (const auto& b : set.biclusters)
    for (std::size_t r : b.rows)
      for (std::size_t c : b.cols) cells.insert(pack_cell(r, c));
}

}  // namespace

IntersectionMatrix intersection_matrix(const BiclusterSet& found, const BiclusterSet& truth) {
  if (found.empty() && truth.empty())
    throw std::invalid_argument("intersection_matrix: both sets empty");
  IntersectionMatrix im;
  im.counts.assign(found.size(), std::vector<std::size_t>(truth.size(), 0));
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < truth.size(); ++j)
      im.counts[i][j] = cell_intersection_size(found.biclusters[i], truth.biclusters[j]);
  im.found_sizes.reserve(found.size());
  for (const auto& b : found.biclusters) im.found_sizes.push_back(b.cell_count());
  im.truth_sizes.reserve(truth.size());
  for (const auto& b : truth.biclusters) im.truth_sizes.push_back(b.cell_count());
  std::unordered_set<std::uint64_t> cells;
  insert_cells(cells, found);
  insert_cells(cells, truth);
  im.union_size = cells.size();
  return im;
}

Assignment hungarian_max(const std::vector<std::vector<long long>>& weights) {
  if (weights.empty() || weights[0].empty())
    throw std::invalid_argument("hungarian_max: empty matrix");
  const std::size_t R = weights.size();
  const std::size_t C = weights[0].size();
  long long maxw = 0;
  for (const auto& row : weights) {
    if (row.size() != C) throw std::invalid_argument("hungarian_max: ragged matrix");
    for (long long w : row) {
      if (w < 0) throw std::invalid_argument("hungarian_max: negative weight");
      maxw = std::max(maxw, w);
    }
  }
  const std::size_t n = std::max(R, C);

  // Minimize cost = maxw - weight on the zero-padded square matrix; every
  // permutation has exactly n terms, so the min-cost solution is the
  // max-weight one.
  auto cost = [&](std::size_t i, std::size_t j) -> long long {
    if (i < R && j < C) return maxw - weights[i][j];
    return maxw;
  };

  const long long inf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> match(n + 1, 0);  // match[j] = row assigned to column j (1-based)
  std::vector<std::size_t> way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<long long> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      long long delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const long long cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out;
  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t i = match[j];
    if (i >= 1 && i <= R && j <= C) {
      out.pairs.emplace_back(i - 1, j - 1);
      out.total += weights[i - 1][j - 1];
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

double clustering_error(const BiclusterSet& found, const BiclusterSet& truth) {
  if (found.empty() && truth.empty())
    throw std::invalid_argument("clustering_error: undefined for two empty sets");
  const IntersectionMatrix im = intersection_matrix(found, truth);
  long long dmax = 0;
  if (!found.empty() && !truth.empty()) {
    std::vector<std::vector<long long>> w(found.size(), std::vector<long long>(truth.size(), 0));
    for (std::size_t i = 0; i < found.size(); ++i)
      for (std::size_t j = 0; j < truth.size(); ++j)
        w[i][j] = static_cast<long long>(im.counts[i][j]);
    dmax = hungarian_max(w).total;
  }
  long long total = 0;
  for (std::size_t s : im.found_sizes) total += static_cast<long long>(s);
  for (std::size_t s : im.truth_sizes) total += static_cast<long long>(s);
  return static_cast<double>(dmax) / static_cast<double>(total - dmax);
}

double relevance(const BiclusterSet& found, const BiclusterSet& truth) {
  if (found.empty()) throw std::invalid_argument("relevance: undefined for empty found set");
  double sum = 0.0;
  for (const auto& f : found.biclusters) {
    double best = 0.0;
    for (const auto& t : truth.biclusters) best = std::max(best, row_jaccard(f, t));
    sum += best;
  }
  return sum / static_cast<double>(found.size());
}

double recovery(const BiclusterSet& found, const BiclusterSet& truth) {
  if (truth.empty()) throw std::invalid_argument("recovery: undefined for empty truth set");
  return relevance(truth, found);
}

}  // namespace bicseek
