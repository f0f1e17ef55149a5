#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "bicseek/metrics.hpp"
#include "bicseek/rng.hpp"

using namespace bicseek;

namespace {

BiclusterSet set_of(std::vector<Bicluster> bics) { return BiclusterSet(std::move(bics)); }

Bicluster random_bicluster(Rng& rng, std::size_t grid) {
  const std::size_t nr = 1 + rng.uniform_index(8);
  const std::size_t nc = 1 + rng.uniform_index(8);
  return Bicluster(rng.sample_sorted(grid, nr), rng.sample_sorted(grid, nc));
}

BiclusterSet random_set(Rng& rng, std::size_t grid, std::size_t max_count) {
  std::vector<Bicluster> bics;
  const std::size_t n = 1 + rng.uniform_index(max_count);
  for (std::size_t i = 0; i < n; ++i) bics.push_back(random_bicluster(rng, grid));
  return set_of(std::move(bics));
}

// max assignment weight by enumerating every permutation of the padded square
long long brute_force_assignment(const std::vector<std::vector<long long>>& w) {
  const std::size_t n = std::max(w.size(), w[0].size());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long best = 0;
  do {
    long long total = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (i < w.size() && perm[i] < w[0].size()) total += w[i][perm[i]];
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// CE recomputed from first principles: cell sets via enumeration, the optimal
// matching via permutations, the union through the matching
double brute_force_ce(const BiclusterSet& found, const BiclusterSet& truth) {
  std::vector<std::vector<long long>> w(found.size(), std::vector<long long>(truth.size(), 0));
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < truth.size(); ++j) {
      std::set<std::pair<std::size_t, std::size_t>> fa;
      for (std::size_t r : found.biclusters[i].rows)
        for (std::size_t c : found.biclusters[i].cols) fa.emplace(r, c);
      long long inter = 0;
      for (std::size_t r : truth.biclusters[j].rows)
        for (std::size_t c : truth.biclusters[j].cols) inter += fa.count({r, c});
      w[i][j] = inter;
    }
  const long long dmax = found.empty() || truth.empty() ? 0 : brute_force_assignment(w);
  long long total = 0;
  for (const auto& b : found.biclusters) total += static_cast<long long>(b.cell_count());
  for (const auto& b : truth.biclusters) total += static_cast<long long>(b.cell_count());
  return static_cast<double>(dmax) / static_cast<double>(total - dmax);
}

}  // namespace

TEST_CASE("intersection_matrix on identical 2x2 biclusters") {
  const auto s = set_of({Bicluster({0, 1}, {0, 1})});
  const auto im = intersection_matrix(s, s);
  CHECK(im.counts == std::vector<std::vector<std::size_t>>{{4}});
  CHECK(im.union_size == 4);
  CHECK(im.found_sizes == std::vector<std::size_t>{4});
}

TEST_CASE("intersection_matrix on disjoint singletons") {
  const auto a = set_of({Bicluster({0}, {0})});
  const auto b = set_of({Bicluster({1}, {1})});
  const auto im = intersection_matrix(a, b);
  CHECK(im.counts == std::vector<std::vector<std::size_t>>{{0}});
  CHECK(im.union_size == 2);
}

TEST_CASE("intersection_matrix counts shared cells") {
  const auto a = set_of({Bicluster({0, 1}, {0, 1})});
  const auto b = set_of({Bicluster({1, 2}, {0, 1})});
  const auto im = intersection_matrix(a, b);
  CHECK(im.counts == std::vector<std::vector<std::size_t>>{{2}});
  CHECK(im.union_size == 6);
}

TEST_CASE("intersection_matrix rejects two empty sets") {
  CHECK_THROWS_AS(intersection_matrix(BiclusterSet{}, BiclusterSet{}), std::invalid_argument);
}

TEST_CASE("intersection counts never exceed either size") {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_set(rng, 15, 4);
    const auto b = random_set(rng, 15, 4);
    const auto im = intersection_matrix(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        CHECK(im.counts[i][j] <= std::min(im.found_sizes[i], im.truth_sizes[j]));
  }
}

TEST_CASE("hungarian_max trivial and 2x2") {
  CHECK(hungarian_max({{5}}).total == 5);
  const auto res = hungarian_max({{1, 2}, {3, 4}});
  CHECK(res.total == 5);  // 1+4 or 2+3
  CHECK(res.pairs.size() == 2);
}

TEST_CASE("hungarian_max equals permutation enumeration on random matrices") {
  Rng rng(4);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + rng.uniform_index(7);
    const std::size_t c = 1 + rng.uniform_index(7);
    std::vector<std::vector<long long>> w(r, std::vector<long long>(c));
    for (auto& row : w)
      for (auto& v : row) v = static_cast<long long>(rng.uniform_index(100));
    CHECK(hungarian_max(w).total == brute_force_assignment(w));
  }
}

TEST_CASE("hungarian_max total is invariant under row and column permutation") {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng.uniform_index(5);
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n));
    for (auto& row : w)
      for (auto& v : row) v = static_cast<long long>(rng.uniform_index(50));
    const long long base = hungarian_max(w).total;

    std::vector<std::vector<long long>> permuted = w;
    rng.shuffle(permuted);  // rows
    for (auto& row : permuted) std::reverse(row.begin(), row.end());
    CHECK(hungarian_max(permuted).total == base);
  }
}

TEST_CASE("hungarian_max rejects bad input") {
  CHECK_THROWS_AS(hungarian_max({}), std::invalid_argument);
  CHECK_THROWS_AS(hungarian_max({{1, 2}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(hungarian_max({{-1}}), std::invalid_argument);
}

TEST_CASE("clustering_error on identical, disjoint and half-covered sets") {
  const auto a = set_of({Bicluster({0, 1}, {2, 3})});
  CHECK(clustering_error(a, a) == 1.0);
  const auto b = set_of({Bicluster({5, 6}, {2, 3})});
  CHECK(clustering_error(a, b) == 0.0);
  // found 1x2 inside truth 2x2: D=2, union 2+4-2=4
  const auto found = set_of({Bicluster({0}, {0, 1})});
  const auto truth = set_of({Bicluster({0, 1}, {0, 1})});
  CHECK(clustering_error(found, truth) == 0.5);
}

TEST_CASE("clustering_error rejects two empty sets but handles one empty side") {
  CHECK_THROWS_AS(clustering_error(BiclusterSet{}, BiclusterSet{}), std::invalid_argument);
  const auto a = set_of({Bicluster({0}, {0})});
  CHECK(clustering_error(BiclusterSet{}, a) == 0.0);
  CHECK(clustering_error(a, BiclusterSet{}) == 0.0);
}

TEST_CASE("clustering_error is symmetric and bounded") {
  Rng rng(6);
  for (int t = 0; t < 60; ++t) {
    const auto a = random_set(rng, 20, 5);
    const auto b = random_set(rng, 20, 5);
    const double ce = clustering_error(a, b);
    CHECK(ce == clustering_error(b, a));
    CHECK(ce >= 0.0);
    CHECK(ce <= 1.0);
  }
}

TEST_CASE("clustering_error equals the brute-force permutation computation") {
  Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    const auto a = random_set(rng, 18, 5);
    const auto b = random_set(rng, 18, 5);
    CHECK(clustering_error(a, b) == brute_force_ce(a, b));
  }
}

TEST_CASE("a background-only found bicluster strictly lowers CE") {
  const auto truth = set_of({Bicluster({0, 1, 2}, {0, 1, 2})});
  const auto found = set_of({Bicluster({0, 1, 2}, {0, 1, 2})});
  const auto padded =
      set_of({Bicluster({0, 1, 2}, {0, 1, 2}), Bicluster({10, 11}, {10, 11})});
  CHECK(clustering_error(padded, truth) < clustering_error(found, truth));
}

TEST_CASE("CE == 1 implies equal total cell counts") {
  Rng rng(8);
  for (int t = 0; t < 80; ++t) {
    const auto a = random_set(rng, 12, 3);
    const auto b = random_set(rng, 12, 3);
    if (clustering_error(a, b) == 1.0) {
      std::size_t sa = 0, sb = 0;
      for (const auto& x : a.biclusters) sa += x.cell_count();
      for (const auto& x : b.biclusters) sb += x.cell_count();
      CHECK(sa == sb);
    }
  }
}

TEST_CASE("relevance and recovery examples") {
  const auto found = set_of({Bicluster({0, 1}, {0, 1})});
  const auto truth = set_of({Bicluster({0, 1}, {0, 1}), Bicluster({5, 6}, {0, 1})});
  CHECK(relevance(found, truth) == 1.0);
  CHECK(recovery(found, truth) == 0.5);
  CHECK(relevance(found, found) == 1.0);
  CHECK(recovery(found, found) == 1.0);
}

TEST_CASE("recovery(a, b) == relevance(b, a) on random sets") {
  Rng rng(9);
  for (int t = 0; t < 60; ++t) {
    const auto a = random_set(rng, 15, 4);
    const auto b = random_set(rng, 15, 4);
    CHECK(recovery(a, b) == relevance(b, a));
  }
}

TEST_CASE("relevance and recovery reject their undefined sides") {
  const auto a = set_of({Bicluster({0}, {0})});
  CHECK_THROWS_AS(relevance(BiclusterSet{}, a), std::invalid_argument);
  CHECK_THROWS_AS(recovery(a, BiclusterSet{}), std::invalid_argument);
}
