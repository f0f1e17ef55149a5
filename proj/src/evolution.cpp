#include "bicseek/evolution.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace bicseek {

namespace {

constexpr int kTabuRetryBudget = 3;

bool contains_column(const std::vector<std::size_t>& cols, std::size_t col) {
  return std::find(cols.begin(), cols.end(), col) != cols.end();
}

std::size_t draw_absent_column(const std::vector<std::size_t>& cols, std::size_t num_cols,
                               Rng& rng) {
  std::size_t c = rng.uniform_index(num_cols);
  while (contains_column(cols, c)) c = rng.uniform_index(num_cols);
  return c;
}

OperatorKind pick_operator(const std::array<double, 5>& weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  double r = rng.uniform_real() * total;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    if (r < weights[i]) return static_cast<OperatorKind>(i);
    r -= weights[i];
  }
  return OperatorKind::crossover;
}

/// Ordering of top-rank entries: score desc, then fewer columns, then
/// lexicographic column sequence.
bool ranks_before(const RankedIndividual& a, const RankedIndividual& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.chromosome.size() != b.chromosome.size()) return a.chromosome.size() < b.chromosome.size();
  return a.chromosome.columns < b.chromosome.columns;
}

double induced_jaccard(const TopRankEntry& a, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
  const std::size_t inter = sorted_intersection_size(a.rows, rows) *
                            sorted_intersection_size(a.cols, cols);
  const std::size_t size_a = a.rows.size() * a.cols.size();
  const std::size_t size_b = rows.size() * cols.size();
  return static_cast<double>(inter) / static_cast<double>(size_a + size_b - inter);
}

}  // namespace

void EvolutionParams::validate() const {
  if (population_size == 0) throw std::invalid_argument("EvolutionParams: population_size == 0");
  if (elite_count == 0 || elite_count >= population_size)
    throw std::invalid_argument("EvolutionParams: need 0 < elite_count < population_size");
  if (num_biclusters == 0) throw std::invalid_argument("EvolutionParams: num_biclusters == 0");
  if (tournament_size == 0) throw std::invalid_argument("EvolutionParams: tournament_size == 0");
  double total = 0.0;
  for (double w : operator_weights) {
    if (w < 0.0) throw std::invalid_argument("EvolutionParams: negative operator weight");
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("EvolutionParams: operator weights all zero");
  if (!(penalty_base > 1.0)) throw std::invalid_argument("EvolutionParams: penalty_base must be > 1");
  if (!(overlap_threshold >= 0.0 && overlap_threshold <= 1.0))
    throw std::invalid_argument("EvolutionParams: overlap_threshold must be in [0, 1]");
  if (init_len_min < 2) throw std::invalid_argument("EvolutionParams: init_len_min must be >= 2");
  if (init_len_max < init_len_min)
    throw std::invalid_argument("EvolutionParams: init_len_max < init_len_min");
  trend.validate();
}

bool TopRankList::insert(const RankedIndividual& ind, const ExpressionMatrix& m,
                         const TrendParams& tp) {
  if (!(ind.score > 0.0)) return false;
  if (full() && ind.score <= min_score()) return false;

  TopRankEntry cand;
  cand.ind = ind;
  cand.rows = supporting_rows(m, ind.chromosome, tp);
  cand.cols = ind.chromosome.columns;
  std::sort(cand.cols.begin(), cand.cols.end());

  std::vector<std::size_t> displaced;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (induced_jaccard(entries_[i], cand.rows, cand.cols) < overlap_threshold_) continue;
    if (entries_[i].ind.score >= ind.score) return false;  // incumbent wins ties
    displaced.push_back(i);
  }
  for (std::size_t k = displaced.size(); k-- > 0;)
    entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(displaced[k]));

  auto pos = std::find_if(entries_.begin(), entries_.end(),
                          [&](const TopRankEntry& e) { return ranks_before(cand.ind, e.ind); });
  entries_.insert(pos, std::move(cand));
  if (entries_.size() > capacity_) entries_.resize(capacity_);
  // the candidate may itself have been truncated away
  return entries_.size() <= capacity_ &&
         std::any_of(entries_.begin(), entries_.end(), [&](const TopRankEntry& e) {
           return e.ind.chromosome.columns == ind.chromosome.columns && e.ind.score == ind.score;
         });
}

Chromosome random_chromosome(const EvolutionParams& p, std::size_t num_cols, Rng& rng) {
  const std::size_t len =
      p.init_len_min + rng.uniform_index(p.init_len_max - p.init_len_min + 1);
  Chromosome c;
  c.columns.reserve(len);
  while (c.columns.size() < len)
    c.columns.push_back(draw_absent_column(c.columns, num_cols, rng));
  return c;
}

std::vector<Chromosome> init_population(const EvolutionParams& p, std::size_t num_cols, Rng& rng) {
  if (num_cols < 2) throw std::invalid_argument("init_population: matrix has fewer than 2 columns");
  if (num_cols < p.init_len_max)
    throw std::invalid_argument("init_population: init_len_max exceeds column count");
  std::vector<Chromosome> pop;
  pop.reserve(p.population_size);
  for (std::size_t i = 0; i < p.population_size; ++i)
    pop.push_back(random_chromosome(p, num_cols, rng));
  return pop;
}

Chromosome mutate(const Chromosome& c, OperatorKind op, std::size_t num_cols, Rng& rng) {
  Chromosome out = c;
  switch (op) {
    case OperatorKind::insertion: {
      if (c.size() >= num_cols) return out;  // no absent column
      const std::size_t col = draw_absent_column(c.columns, num_cols, rng);
      const std::size_t pos = rng.uniform_index(c.size() + 1);
      out.columns.insert(out.columns.begin() + static_cast<std::ptrdiff_t>(pos), col);
      return out;
    }
    case OperatorKind::deletion: {
      if (c.size() <= 2) return out;  // length floor
      const std::size_t pos = rng.uniform_index(c.size());
      out.columns.erase(out.columns.begin() + static_cast<std::ptrdiff_t>(pos));
      return out;
    }
    case OperatorKind::substitution: {
      if (c.size() >= num_cols) return out;
      const std::size_t col = draw_absent_column(c.columns, num_cols, rng);
      const std::size_t pos = rng.uniform_index(c.size());
      out.columns[pos] = col;
      return out;
    }
    case OperatorKind::swap: {
      const std::size_t i = rng.uniform_index(c.size());
      std::size_t j = rng.uniform_index(c.size() - 1);
      if (j >= i) ++j;  // two distinct positions
      std::swap(out.columns[i], out.columns[j]);
      return out;
    }
    case OperatorKind::crossover:
      throw std::invalid_argument("mutate: crossover needs two parents");
  }
  return out;
}

Chromosome crossover(const Chromosome& a, const Chromosome& b, Rng& rng) {
  constexpr int kCutRetries = 8;
  for (int attempt = 0; attempt < kCutRetries; ++attempt) {
    const std::size_t cut_a = rng.uniform_index(a.size() + 1);
    const std::size_t cut_b = rng.uniform_index(b.size() + 1);
    Chromosome child;
    child.columns.assign(a.columns.begin(), a.columns.begin() + static_cast<std::ptrdiff_t>(cut_a));
    for (std::size_t k = cut_b; k < b.size(); ++k)
      if (!contains_column(child.columns, b.columns[k])) child.columns.push_back(b.columns[k]);
    if (child.size() >= 2) return child;
  }
  return a;
}

double penalized_score(double raw_score, const Chromosome& c,
                       const std::vector<std::size_t>& usage, const EvolutionParams& p) {
  double sum = 0.0;
  for (std::size_t col : c.columns) sum += static_cast<double>(usage[col]);
  const double mean = sum / static_cast<double>(c.size());
  return raw_score * std::pow(p.penalty_base, -mean);
}

const RankedIndividual& tournament_select(const std::vector<RankedIndividual>& pop,
                                          const std::vector<std::size_t>& usage,
                                          const EvolutionParams& p, Rng& rng) {
  if (pop.empty()) throw std::invalid_argument("tournament_select: empty population");
  const RankedIndividual* best = nullptr;
  double best_score = 0.0;
  for (std::size_t t = 0; t < p.tournament_size; ++t) {
    const RankedIndividual& cand = pop[rng.uniform_index(pop.size())];
    const double s = penalized_score(cand.score, cand.chromosome, usage, p);
    if (best == nullptr) {
      best = &cand;
      best_score = s;
      continue;
    }
    if (s > best_score) {
      best = &cand;
      best_score = s;
    } else if (s == best_score) {
      if (cand.chromosome.size() < best->chromosome.size())
        best = &cand;
      else if (cand.chromosome.size() == best->chromosome.size() && rng.uniform_index(2) == 0)
        best = &cand;
    }
  }
  return *best;
}

namespace {

std::vector<std::size_t> column_usage_of(const std::vector<RankedIndividual>& pop,
                                         std::size_t num_cols) {
  std::vector<std::size_t> usage(num_cols, 0);
  for (const auto& ind : pop)
    for (std::size_t col : ind.chromosome.columns) ++usage[col];
  return usage;
}

RankedIndividual make_ranked(Chromosome&& c, std::size_t support, const TrendParams& tp) {
  RankedIndividual ri;
  ri.score = fitness(support, c.size(), tp);
  ri.support_count = support;
  ri.chromosome = std::move(c);
  return ri;
}

}  // namespace

EvolutionState init_state(const ExpressionMatrix& m, const EvolutionParams& p, WorkerPool* pool) {
  EvolutionState state(p.top_rank_capacity(), p.overlap_threshold, p.seed);
  std::vector<Chromosome> pop = init_population(p, m.cols(), state.rng);
  const std::vector<std::size_t> counts = evaluate_population(m, pop, p.trend, pool);
  state.population.reserve(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) {
    state.tabu.insert(chromosome_hash(pop[i]));
    RankedIndividual ri = make_ranked(std::move(pop[i]), counts[i], p.trend);
    state.top_rank.insert(ri, m, p.trend);
    state.population.push_back(std::move(ri));
  }
  state.column_usage = column_usage_of(state.population, m.cols());
  return state;
}

void step_generation(EvolutionState& state, const ExpressionMatrix& m, const EvolutionParams& p,
                     WorkerPool* pool) {
  const std::size_t num_cols = m.cols();
  std::vector<RankedIndividual> next;
  next.reserve(p.population_size);

  const auto& ranked = state.top_rank.entries();
  const std::size_t n_elite = std::min(p.elite_count, ranked.size());
  for (std::size_t i = 0; i < n_elite; ++i) next.push_back(ranked[i].ind);

  // Offspring: tournament parent(s), weighted-random operator, tabu check.
  // Random draws happen in this fixed order only on the control thread.
  std::vector<Chromosome> offspring;
  offspring.reserve(p.population_size - next.size());
  while (next.size() + offspring.size() < p.population_size) {
    Chromosome child;
    bool accepted = false;
    for (int attempt = 0; attempt < kTabuRetryBudget; ++attempt) {
      const RankedIndividual& parent = tournament_select(state.population, state.column_usage, p, state.rng);
      const OperatorKind op = pick_operator(p.operator_weights, state.rng);
      if (op == OperatorKind::crossover) {
        const RankedIndividual& other =
            tournament_select(state.population, state.column_usage, p, state.rng);
        child = crossover(parent.chromosome, other.chromosome, state.rng);
      } else {
        child = mutate(parent.chromosome, op, num_cols, state.rng);
      }
      const std::uint64_t h = chromosome_hash(child);
      if (state.tabu.contains(h)) {
        ++state.tabu.hit_count;
        continue;
      }
      state.tabu.insert(h);
      accepted = true;
      break;
    }
    if (!accepted) {
      child = random_chromosome(p, num_cols, state.rng);
      state.tabu.insert(chromosome_hash(child));
    }
    offspring.push_back(std::move(child));
  }

  const std::vector<std::size_t> counts = evaluate_population(m, offspring, p.trend, pool);
  bool improved = false;
  for (std::size_t i = 0; i < offspring.size(); ++i) {
    RankedIndividual ri = make_ranked(std::move(offspring[i]), counts[i], p.trend);
    improved = state.top_rank.insert(ri, m, p.trend) || improved;
    next.push_back(std::move(ri));
  }
  if (improved) state.tabu.hit_count = 0;

  state.population = std::move(next);
  state.column_usage = column_usage_of(state.population, num_cols);
  ++state.generation;
}

RunResult run(const ExpressionMatrix& m, const EvolutionParams& p) {
  p.validate();
  if (m.rows() == 0 || m.cols() < 2) throw std::invalid_argument("run: matrix too small");
  const auto t0 = std::chrono::steady_clock::now();

  WorkerPool pool(p.threads);
  EvolutionState state = init_state(m, p, &pool);

  std::string reason = "budget";
  while (state.generation < p.max_iterations) {
    if (state.tabu.hit_count >= p.effective_tabu_threshold()) {
      reason = "converged";
      break;
    }
    step_generation(state, m, p, &pool);
  }

  RunResult result;
  for (const auto& entry : state.top_rank.entries()) {
    if (result.biclusters.size() >= p.num_biclusters) break;
    if (entry.ind.support_count < p.trend.min_rows) continue;
    result.biclusters.biclusters.emplace_back(entry.rows, entry.cols);
  }
  result.report.generations = state.generation;
  result.report.termination = reason;
  result.report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace bicseek
