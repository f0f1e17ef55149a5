#include "bicseek/trend.hpp"

#include <cmath>
#include <stdexcept>

namespace bicseek {

void TrendParams::validate() const {
  if (!(approx >= 0.0 && approx < 1.0))
    throw std::invalid_argument("TrendParams: approx must be in [0, 1)");
  if (min_rows < 2) throw std::invalid_argument("TrendParams: min_rows must be >= 2");
  if (col_cap < 2) throw std::invalid_argument("TrendParams: col_cap must be >= 2");
}

namespace {

inline bool follows_forward(const double* row, const std::vector<std::size_t>& cols,
                            double approx) {
  double prev = row[cols[0]];
  for (std::size_t k = 1; k < cols.size(); ++k) {
    const double cur = row[cols[k]];
    if (!(cur > prev - approx * std::fabs(prev))) return false;
    prev = cur;
  }
  return true;
}

inline bool follows_reversed(const double* row, const std::vector<std::size_t>& cols,
                             double approx) {
  double prev = row[cols[cols.size() - 1]];
  for (std::size_t k = cols.size() - 1; k-- > 0;) {
    const double cur = row[cols[k]];
    if (!(cur > prev - approx * std::fabs(prev))) return false;
    prev = cur;
  }
  return true;
}

}  // namespace

bool row_supports(const ExpressionMatrix& m, std::size_t row, const Chromosome& c,
                  const TrendParams& p) {
  const double* r = m.row_data(row);
  if (follows_forward(r, c.columns, p.approx)) return true;
  return p.negative_trends && follows_reversed(r, c.columns, p.approx);
}

std::vector<std::size_t> supporting_rows(const ExpressionMatrix& m, const Chromosome& c,
                                         const TrendParams& p) {
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (row_supports(m, r, c, p)) rows.push_back(r);
  return rows;
}

std::vector<std::size_t> evaluate_population(const ExpressionMatrix& m,
                                             const std::vector<Chromosome>& pop,
                                             const TrendParams& p, WorkerPool* pool) {
  std::vector<std::size_t> counts(pop.size(), 0);
  auto eval_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      std::size_t n = 0;
      for (std::size_t r = 0; r < m.rows(); ++r) n += row_supports(m, r, pop[i], p) ? 1 : 0;
      counts[i] = n;
    }
  };
  if (pool == nullptr || pool->size() <= 1)
    eval_range(0, pop.size());
  else
    pool->run(pop.size(), eval_range);
  return counts;
}

double fitness(std::size_t support_count, std::size_t num_cols, const TrendParams& p) {
  if (support_count < p.min_rows) return 0.0;
  const int bonus = static_cast<int>(std::min(num_cols, p.col_cap));
  // ldexp keeps the power of two exact for any cap
  return std::ldexp(static_cast<double>(support_count), bonus);
}

}  // namespace bicseek
