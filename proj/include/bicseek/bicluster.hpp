#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace bicseek {

/// One individual of the evolutionary search: an ordered sequence of distinct
/// column indices. The sequence defines the value order a supporting row must
/// follow. Length is at least 2; a single column cannot express a trend.
struct Chromosome {
  std::vector<std::size_t> columns;

  Chromosome() = default;
  explicit Chromosome(std::vector<std::size_t> cols) : columns(std::move(cols)) {}

  std::size_t size() const { return columns.size(); }

  /// Throws std::invalid_argument on duplicate columns, out-of-range indices,
  /// or length < 2.
  void validate(std::size_t num_cols) const;
};

/// Order-sensitive 64-bit digest of the column sequence. FNV-1a folded over
/// each index as 8 little-endian bytes, so the value is identical on every
/// platform and run. Used as the tabu-list key.
std::uint64_t chromosome_hash(const Chromosome& c);

/// A submatrix: a sorted set of row indices times a sorted set of column
/// indices. Both sets are nonempty.
struct Bicluster {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  Bicluster() = default;

  /// Sorts and deduplicates both index sets; throws if either ends up empty.
  Bicluster(std::vector<std::size_t> row_set, std::vector<std::size_t> col_set);

  std::size_t cell_count() const { return rows.size() * cols.size(); }

  void validate(std::size_t num_rows, std::size_t num_cols) const;
};

struct BiclusterSet {
  std::vector<Bicluster> biclusters;

  BiclusterSet() = default;
  explicit BiclusterSet(std::vector<Bicluster> bics) : biclusters(std::move(bics)) {}

  bool empty() const { return biclusters.empty(); }
  std::size_t size() const { return biclusters.size(); }
};

/// The Cartesian product rows x cols, row-major. Size is |rows|*|cols|.
std::vector<std::pair<std::size_t, std::size_t>> bicluster_cells(const Bicluster& b);

/// Size of the intersection of two sorted index vectors.
std::size_t sorted_intersection_size(const std::vector<std::size_t>& a,
                                     const std::vector<std::size_t>& b);

/// |cells(a) n cells(b)|. Cells are products, so this is |rows n| * |cols n|.
std::size_t cell_intersection_size(const Bicluster& a, const Bicluster& b);

/// Jaccard index of the two cell sets, in [0, 1]. 1 iff the cell sets are equal.
double cell_jaccard(const Bicluster& a, const Bicluster& b);

/// Jaccard index of the row sets only (the recovery/relevance building block).
double row_jaccard(const Bicluster& a, const Bicluster& b);

}  // namespace bicseek
