#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "bicseek/bicluster.hpp"

namespace bicseek {

/// Pairwise cell-overlap counts between a found and a truth bicluster set,
/// plus the sizes needed by the downstream scores.
struct IntersectionMatrix {
  std::vector<std::vector<std::size_t>> counts;  // found x truth
  std::vector<std::size_t> found_sizes;          // cell counts
  std::vector<std::size_t> truth_sizes;
  std::size_t union_size = 0;  // distinct cells covered by either set
};

/// counts[i][j] = |cells(found[i]) n cells(truth[j])|.
/// Throws std::invalid_argument when both sets are empty.
IntersectionMatrix intersection_matrix(const BiclusterSet& found, const BiclusterSet& truth);

struct Assignment {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (row, col) of the input matrix
  long long total = 0;
};

/// Maximum-weight one-to-one assignment of rows to columns of a rectangular
/// nonnegative integer matrix (padded to square internally). Exact O(n^3)
/// shortest-augmenting-path solver with integer potentials.
Assignment hungarian_max(const std::vector<std::vector<long long>>& weights);

/// Goodness of fit of two bicluster sets in [0, 1]; 1 is a perfect match.
///
/// D_max is the optimal assignment value over the pairwise cell overlaps;
/// the denominator is the union size measured through that matching,
/// sum(found cells) + sum(truth cells) - D_max, which makes identical sets
/// score exactly 1 even when biclusters overlap within a set.
/// Throws when both sets are empty.
double clustering_error(const BiclusterSet& found, const BiclusterSet& truth);

/// Mean over found biclusters of the best row-set Jaccard against truth.
/// Throws when found is empty.
double relevance(const BiclusterSet& found, const BiclusterSet& truth);

/// Mean over truth biclusters of the best row-set Jaccard against found;
/// recovery(a, b) == relevance(b, a). Throws when truth is empty.
double recovery(const BiclusterSet& found, const BiclusterSet& truth);

}  // namespace bicseek
