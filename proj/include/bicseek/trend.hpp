#pragma once

#include <cstddef>
#include <vector>

#include "bicseek/bicluster.hpp"
#include "bicseek/matrix.hpp"
#include "bicseek/worker_pool.hpp"

namespace bicseek {

/// Knobs of the trend test and of the score it feeds.
struct TrendParams {
  /// Relative slack: a step may dip below the previous value by
  /// approx * |previous value| and still count as increasing.
  double approx = 0.03;
  /// Also accept rows that follow the reversed column sequence.
  bool negative_trends = false;
  /// Support floor: fewer supporting rows than this scores 0.
  std::size_t min_rows = 10;
  /// Cap on the exponential column bonus in the score.
  std::size_t col_cap = 8;

  void validate() const;
};

/// True iff the row's values, read in chromosome order, are increasing within
/// the approx slack; with negative_trends also checks the reversed order.
/// At approx == 0 this is strict monotonicity, so ties fail.
bool row_supports(const ExpressionMatrix& m, std::size_t row, const Chromosome& c,
                  const TrendParams& p);

/// All rows for which row_supports holds, ascending.
std::vector<std::size_t> supporting_rows(const ExpressionMatrix& m, const Chromosome& c,
                                         const TrendParams& p);

/// Support counts for a whole population, result[i] matching pop[i].
///
/// This is the designated parallel region: the (chromosome x row) grid is
/// split across pool workers with each chromosome's count accumulated as a
/// plain integer, so the result is bit-identical for any worker count.
/// A null pool evaluates sequentially.
std::vector<std::size_t> evaluate_population(const ExpressionMatrix& m,
                                             const std::vector<Chromosome>& pop,
                                             const TrendParams& p, WorkerPool* pool = nullptr);

/// 0 below the support floor, otherwise support_count * 2^min(num_cols, col_cap).
/// The exponential column bonus is what makes widening a bicluster worth the
/// rows it usually costs.
double fitness(std::size_t support_count, std::size_t num_cols, const TrendParams& p);

}  // namespace bicseek
