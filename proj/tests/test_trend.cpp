#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "bicseek/datagen.hpp"
#include "bicseek/rng.hpp"
#include "bicseek/trend.hpp"

using namespace bicseek;

namespace {

ExpressionMatrix make_matrix(std::vector<std::vector<double>> rows) {
  const std::size_t nr = rows.size(), nc = rows[0].size();
  std::vector<double> values;
  for (const auto& r : rows) values.insert(values.end(), r.begin(), r.end());
  return ExpressionMatrix(std::move(values), nr, nc, default_labels('r', nr),
                          default_labels('c', nc));
}

TrendParams params(double approx, bool negatives = false) {
  TrendParams p;
  p.approx = approx;
  p.negative_trends = negatives;
  return p;
}

Chromosome random_chromosome_for(Rng& rng, std::size_t num_cols) {
  const std::size_t len = 2 + rng.uniform_index(std::min<std::size_t>(6, num_cols - 1));
  std::vector<std::size_t> cols = rng.sample_sorted(num_cols, len);
  rng.shuffle(cols);
  return Chromosome(std::move(cols));
}

// literal re-statement of the pairwise predicate, kept independent of the
// implementation path it checks
bool pairwise_oracle(const ExpressionMatrix& m, std::size_t row, const Chromosome& c,
                     double approx) {
  for (std::size_t k = 0; k + 1 < c.columns.size(); ++k) {
    const double prev = m(row, c.columns[k]);
    const double cur = m(row, c.columns[k + 1]);
    if (!(cur > prev - approx * std::fabs(prev))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("trend params validation") {
  CHECK_NOTHROW(TrendParams{}.validate());
  TrendParams p;
  p.approx = 1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = TrendParams{};
  p.min_rows = 1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("row_supports on strictly increasing values") {
  const auto m = make_matrix({{1.0, 2.0, 3.0}});
  CHECK(row_supports(m, 0, Chromosome({0, 1, 2}), params(0.0)));
  CHECK_FALSE(row_supports(m, 0, Chromosome({2, 1, 0}), params(0.0)));
}

TEST_CASE("row_supports follows the visiting order, not the column order") {
  // visiting columns 1,2,0 of (3,1,2) reads 1,2,3
  const auto m = make_matrix({{3.0, 1.0, 2.0}});
  CHECK(row_supports(m, 0, Chromosome({1, 2, 0}), params(0.0)));
}

TEST_CASE("ties fail at approx 0 and pass within tolerance") {
  const auto m = make_matrix({{1.0, 1.0}});
  CHECK_FALSE(row_supports(m, 0, Chromosome({0, 1}), params(0.0)));
  CHECK(row_supports(m, 0, Chromosome({0, 1}), params(0.05)));
}

TEST_CASE("constant rows support nothing at approx 0 even with negative trends") {
  const auto m = make_matrix({{2.0, 2.0, 2.0}});
  CHECK_FALSE(row_supports(m, 0, Chromosome({0, 1, 2}), params(0.0, true)));
}

TEST_CASE("supporting_rows picks exactly the monotone rows") {
  const auto m = make_matrix({{1.0, 2.0, 3.0}, {3.0, 2.0, 1.0}, {2.0, 1.0, 3.0}});
  const Chromosome c({0, 1, 2});
  CHECK(supporting_rows(m, c, params(0.0)) == std::vector<std::size_t>{0});
  CHECK(supporting_rows(m, c, params(0.0, true)) == std::vector<std::size_t>{0, 1});
  CHECK(supporting_rows(m, Chromosome({2, 0, 1}), params(0.0)) == std::vector<std::size_t>{});
}

TEST_CASE("row_supports at approx 0 equals a strict sorted-subsequence check") {
  Rng rng(7);
  const ExpressionMatrix m = gen_background(40, 15, 99);
  for (int t = 0; t < 500; ++t) {
    const Chromosome c = random_chromosome_for(rng, m.cols());
    const std::size_t row = rng.uniform_index(m.rows());
    std::vector<double> visited;
    for (std::size_t col : c.columns) visited.push_back(m(row, col));
    const bool strictly_sorted =
        std::adjacent_find(visited.begin(), visited.end(),
                           [](double a, double b) { return a >= b; }) == visited.end();
    CHECK(row_supports(m, row, c, params(0.0)) == strictly_sorted);
  }
}

TEST_CASE("row_supports matches the pairwise oracle for positive tolerance") {
  Rng rng(8);
  const ExpressionMatrix m = gen_background(40, 15, 100);
  for (int t = 0; t < 500; ++t) {
    const Chromosome c = random_chromosome_for(rng, m.cols());
    const std::size_t row = rng.uniform_index(m.rows());
    const double approx = rng.uniform_real(0.0, 0.3);
    CHECK(row_supports(m, row, c, params(approx)) == pairwise_oracle(m, row, c, approx));
  }
}

TEST_CASE("raising approx never unsupports a row") {
  Rng rng(9);
  const ExpressionMatrix m = gen_background(30, 12, 101);
  for (int t = 0; t < 400; ++t) {
    const Chromosome c = random_chromosome_for(rng, m.cols());
    const std::size_t row = rng.uniform_index(m.rows());
    const double a1 = rng.uniform_real(0.0, 0.2);
    const double a2 = a1 + rng.uniform_real(0.0, 0.3);
    if (row_supports(m, row, c, params(a1))) CHECK(row_supports(m, row, c, params(a2)));
  }
}

TEST_CASE("negative trends only ever add rows") {
  Rng rng(10);
  const ExpressionMatrix m = gen_background(50, 12, 102);
  for (int t = 0; t < 100; ++t) {
    const Chromosome c = random_chromosome_for(rng, m.cols());
    const auto plain = supporting_rows(m, c, params(0.02));
    const auto with_neg = supporting_rows(m, c, params(0.02, true));
    CHECK(std::includes(with_neg.begin(), with_neg.end(), plain.begin(), plain.end()));
  }
}

TEST_CASE("support decisions are scale-free") {
  Rng rng(11);
  const ExpressionMatrix m = gen_background(30, 10, 103);
  for (double factor : {0.001, 0.5, 7.0, 1000.0}) {
    std::vector<double> scaled = m.values();
    for (double& v : scaled) v *= factor;
    const ExpressionMatrix ms(std::move(scaled), m.rows(), m.cols(), m.row_labels(),
                              m.col_labels());
    for (int t = 0; t < 100; ++t) {
      const Chromosome c = random_chromosome_for(rng, m.cols());
      for (double approx : {0.0, 0.05}) {
        CHECK(supporting_rows(m, c, params(approx)) == supporting_rows(ms, c, params(approx)));
      }
    }
  }
}

TEST_CASE("evaluate_population matches per-chromosome counting and a brute-force oracle") {
  Rng rng(12);
  const ExpressionMatrix m = gen_background(100, 20, 104);
  std::vector<Chromosome> pop;
  for (int i = 0; i < 50; ++i) pop.push_back(random_chromosome_for(rng, m.cols()));
  const TrendParams p = params(0.03);

  const auto counts = evaluate_population(m, pop, p);
  REQUIRE(counts.size() == pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) {
    // sequential double loop, written out independently
    std::size_t expect = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (pairwise_oracle(m, r, pop[i], p.approx)) ++expect;
    CHECK(counts[i] == expect);
    CHECK(counts[i] == supporting_rows(m, pop[i], p).size());
  }
}

TEST_CASE("evaluate_population is invariant under worker count") {
  Rng rng(13);
  const ExpressionMatrix m = gen_background(80, 16, 105);
  std::vector<Chromosome> pop;
  for (int i = 0; i < 37; ++i) pop.push_back(random_chromosome_for(rng, m.cols()));
  const TrendParams p = params(0.01, true);

  const auto seq = evaluate_population(m, pop, p, nullptr);
  for (unsigned workers : {1u, 2u, 3u, 8u}) {
    WorkerPool pool(workers);
    CHECK(evaluate_population(m, pop, p, &pool) == seq);
  }
}

TEST_CASE("fitness floor, formula and cap") {
  TrendParams p;
  p.min_rows = 10;
  p.col_cap = 8;
  CHECK(fitness(5, 4, p) == 0.0);
  CHECK(fitness(10, 3, p) == 80.0);     // 10 * 2^3
  CHECK(fitness(10, 12, p) == 2560.0);  // cap binds at 2^8
}

TEST_CASE("fitness is monotone above the floor") {
  TrendParams p;
  p.min_rows = 2;
  p.col_cap = 16;
  for (std::size_t support = 2; support < 40; ++support)
    for (std::size_t cols = 2; cols < 20; ++cols) {
      CHECK(fitness(support + 1, cols, p) >= fitness(support, cols, p));
      CHECK(fitness(support, cols + 1, p) >= fitness(support, cols, p));
    }
}
