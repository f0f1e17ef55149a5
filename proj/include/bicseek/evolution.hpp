#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "bicseek/bicluster.hpp"
#include "bicseek/matrix.hpp"
#include "bicseek/rng.hpp"
#include "bicseek/trend.hpp"
#include "bicseek/worker_pool.hpp"

namespace bicseek {

enum class OperatorKind { insertion, deletion, substitution, swap, crossover };

struct EvolutionParams {
  std::size_t population_size = 400;
  std::size_t elite_count = 8;
  std::size_t max_iterations = 20000;
  std::size_t num_biclusters = 3;
  /// 0 means "one full wasted generation", i.e. population_size.
  std::size_t tabu_hits_threshold = 0;
  std::size_t tournament_size = 4;
  /// Weights for insertion, deletion, substitution, swap, crossover.
  std::array<double, 5> operator_weights{0.3, 0.1, 0.25, 0.15, 0.2};
  /// Base of the exponential column-crowding penalty applied in tournaments.
  double penalty_base = 1.1;
  /// Two top-rank entries may not overlap by this much (cell Jaccard).
  double overlap_threshold = 0.75;
  std::size_t init_len_min = 3;
  std::size_t init_len_max = 5;
  std::uint64_t seed = 42;
  /// Worker threads for fitness evaluation; 0 selects all cores.
  unsigned threads = 0;
  TrendParams trend;

  void validate() const;
  std::size_t effective_tabu_threshold() const {
    return tabu_hits_threshold != 0 ? tabu_hits_threshold : population_size;
  }
  /// Extra slots beyond the requested bicluster count give the finalizer
  /// alternatives when high-ranked entries are rejected.
  std::size_t top_rank_capacity() const { return 3 * num_biclusters; }
};

/// Hashes of every chromosome ever accepted for evaluation. hit_count tracks
/// rejected duplicates since the last top-rank improvement; reaching the
/// threshold means the search is stagnating.
struct TabuList {
  std::unordered_set<std::uint64_t> seen;
  std::size_t hit_count = 0;

  bool contains(std::uint64_t h) const { return seen.find(h) != seen.end(); }
  void insert(std::uint64_t h) { seen.insert(h); }
};

struct RankedIndividual {
  Chromosome chromosome;
  double score = 0.0;
  std::size_t support_count = 0;
};

/// Top-rank entry with the induced bicluster cached (supporting rows plus the
/// chromosome's columns as a sorted set), so overlap checks stay cheap.
struct TopRankEntry {
  RankedIndividual ind;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Best-so-far archive, sorted by score descending (ties: fewer columns, then
/// lexicographic column sequence). No two entries overlap by cell Jaccard >=
/// the threshold; conflicts keep the higher-scored entry.
class TopRankList {
 public:
  TopRankList(std::size_t capacity, double overlap_threshold)
      : capacity_(capacity), overlap_threshold_(overlap_threshold) {}

  /// Returns true when the individual entered the list. Individuals scoring 0
  /// never enter. Computes the induced bicluster only when the score could
  /// actually place.
  bool insert(const RankedIndividual& ind, const ExpressionMatrix& m, const TrendParams& tp);

  const std::vector<TopRankEntry>& entries() const { return entries_; }
  std::size_t capacity() const { return capacity_; }
  bool full() const { return entries_.size() >= capacity_; }
  double min_score() const { return entries_.empty() ? 0.0 : entries_.back().ind.score; }
  double best_score() const { return entries_.empty() ? 0.0 : entries_.front().ind.score; }

 private:
  std::vector<TopRankEntry> entries_;
  std::size_t capacity_;
  double overlap_threshold_;
};

struct EvolutionState {
  std::size_t generation = 0;
  std::vector<RankedIndividual> population;
  TopRankList top_rank;
  TabuList tabu;
  std::vector<std::size_t> column_usage;  // per matrix column, over the current population
  Rng rng;

  EvolutionState(std::size_t capacity, double overlap_threshold, std::uint64_t seed)
      : top_rank(capacity, overlap_threshold), rng(seed) {}
};

struct RunReport {
  std::size_t generations = 0;
  double wall_time_seconds = 0.0;
  std::string termination;  // "converged" or "budget"
};

struct RunResult {
  BiclusterSet biclusters;
  RunReport report;
};

/// population_size chromosomes with lengths uniform in [init_len_min,
/// init_len_max], distinct random columns in random order.
std::vector<Chromosome> init_population(const EvolutionParams& p, std::size_t num_cols, Rng& rng);

/// One fresh random chromosome drawn like the initial population.
Chromosome random_chromosome(const EvolutionParams& p, std::size_t num_cols, Rng& rng);

/// Single-parent operators. Insertion/substitution return the input unchanged
/// when every column is already used; deletion returns it unchanged at the
/// length floor of 2.
Chromosome mutate(const Chromosome& c, OperatorKind op, std::size_t num_cols, Rng& rng);

/// Prefix of a spliced with a suffix of b at random cut points, duplicates
/// dropped keeping the first occurrence. Retries cuts that leave fewer than 2
/// columns, falling back to a copy of a.
Chromosome crossover(const Chromosome& a, const Chromosome& b, Rng& rng);

/// raw_score / penalty_base^(mean usage of the chromosome's columns).
double penalized_score(double raw_score, const Chromosome& c,
                       const std::vector<std::size_t>& usage, const EvolutionParams& p);

/// tournament_size draws with replacement; highest penalized score wins,
/// ties prefer fewer columns, remaining ties flip a coin.
const RankedIndividual& tournament_select(const std::vector<RankedIndividual>& pop,
                                          const std::vector<std::size_t>& usage,
                                          const EvolutionParams& p, Rng& rng);

/// Scored initial population: generation 0, top rank and column usage filled.
EvolutionState init_state(const ExpressionMatrix& m, const EvolutionParams& p, WorkerPool* pool);

/// One generation: elites from the top rank, offspring via tournament + a
/// weighted-random operator with tabu-checked retries, batch scoring, top-rank
/// and bookkeeping updates. A top-rank improvement resets the tabu hit count.
void step_generation(EvolutionState& state, const ExpressionMatrix& m, const EvolutionParams& p,
                     WorkerPool* pool);

/// The full search loop: init, generations until the iteration budget or the
/// tabu hit threshold, then biclusters from the top num_biclusters entries.
RunResult run(const ExpressionMatrix& m, const EvolutionParams& p);

}  // namespace bicseek
