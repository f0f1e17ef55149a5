#include "bicseek/datagen.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace bicseek {

const char* to_string(PatternKind p) {
  switch (p) {
    case PatternKind::trend: return "trend";
    case PatternKind::column_const: return "column_const";
    case PatternKind::row_const: return "row_const";
    case PatternKind::shift: return "shift";
    case PatternKind::scale: return "scale";
    case PatternKind::shift_scale: return "shift_scale";
  }
  return "?";
}

const char* to_string(ScenarioKind s) {
  switch (s) {
    case ScenarioKind::six_types: return "six_types";
    case ScenarioKind::overlap: return "overlap";
    case ScenarioKind::narrow: return "narrow";
    case ScenarioKind::noise: return "noise";
    case ScenarioKind::colincrease: return "colincrease";
    case ScenarioKind::colin1000: return "colin1000";
    case ScenarioKind::different: return "different";
    case ScenarioKind::large_variant: return "large_variant";
  }
  return "?";
}

PatternKind pattern_from_string(const std::string& s) {
  for (auto p : {PatternKind::trend, PatternKind::column_const, PatternKind::row_const,
                 PatternKind::shift, PatternKind::scale, PatternKind::shift_scale})
    if (s == to_string(p)) return p;
  throw std::invalid_argument("unknown pattern: " + s);
}

ScenarioKind scenario_from_string(const std::string& s) {
  for (auto k : {ScenarioKind::six_types, ScenarioKind::overlap, ScenarioKind::narrow,
                 ScenarioKind::noise, ScenarioKind::colincrease, ScenarioKind::colin1000,
                 ScenarioKind::different, ScenarioKind::large_variant})
    if (s == to_string(k)) return k;
  throw std::invalid_argument("unknown scenario: " + s);
}

void ScenarioSpec::validate() const {
  if (matrix_rows == 0 || matrix_cols < 2)
    throw std::invalid_argument("ScenarioSpec: matrix must have rows and at least 2 columns");
  if (bic_rows == 0 || bic_cols == 0 || bic_rows > matrix_rows || bic_cols > matrix_cols)
    throw std::invalid_argument("ScenarioSpec: bicluster dims must fit inside the matrix");
  if (num_biclusters == 0) throw std::invalid_argument("ScenarioSpec: num_biclusters == 0");
  if (overlap_cells.first > bic_rows || overlap_cells.second > bic_cols)
    throw std::invalid_argument("ScenarioSpec: overlap exceeds bicluster dims");
  if (noise_sigma < 0.0) throw std::invalid_argument("ScenarioSpec: negative noise");
  if (scenario == ScenarioKind::narrow && bic_cols * num_biclusters > matrix_cols)
    throw std::invalid_argument("ScenarioSpec: narrow widths exceed matrix columns");
}

ExpressionMatrix gen_background(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> values(rows * cols);
  for (double& v : values) v = rng.normal();
  return ExpressionMatrix(std::move(values), rows, cols, default_labels('r', rows),
                          default_labels('c', cols));
}

Bicluster implant_pattern(ExpressionMatrix& m, PatternKind pattern,
                          const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols, const ImplantParams& params,
                          Rng& rng) {
  Bicluster b(rows, cols);
  b.validate(m.rows(), m.cols());
  const std::size_t nc = b.cols.size();

  switch (pattern) {
    case PatternKind::trend: {
      // shared column order; each row gets its own sorted normals along it
      std::vector<std::size_t> order = b.cols;
      rng.shuffle(order);
      std::vector<double> vals(nc);
      for (std::size_t r : b.rows) {
        for (double& v : vals) v = rng.normal();
        std::sort(vals.begin(), vals.end());
        for (std::size_t k = 0; k < nc; ++k) m(r, order[k]) = vals[k];
      }
      break;
    }
    case PatternKind::column_const: {
      for (std::size_t c : b.cols) {
        const double v = rng.normal();
        for (std::size_t r : b.rows) m(r, c) = v;
      }
      break;
    }
    case PatternKind::row_const: {
      for (std::size_t r : b.rows) {
        const double v = rng.normal();
        for (std::size_t c : b.cols) m(r, c) = v;
      }
      break;
    }
    case PatternKind::shift:
    case PatternKind::scale:
    case PatternKind::shift_scale: {
      std::vector<double> base(nc);
      for (double& v : base) v = rng.normal();
      for (std::size_t r : b.rows) {
        // per row: scale factor first, then offset
        const double s = (pattern == PatternKind::shift)
                             ? 1.0
                             : rng.uniform_real(params.scale_lo, params.scale_hi);
        const double o = (pattern == PatternKind::scale) ? 0.0 : rng.normal();
        for (std::size_t k = 0; k < nc; ++k) m(r, b.cols[k]) = base[k] * s + o;
      }
      break;
    }
  }

  for (std::size_t r : b.rows)
    for (std::size_t c : b.cols) {
      m(r, c) += params.mean_shift;
      if (params.noise_sigma > 0.0) m(r, c) += rng.normal(0.0, params.noise_sigma);
    }
  return b;
}

namespace {

std::vector<std::size_t> contiguous_range(std::size_t start, std::size_t len) {
  std::vector<std::size_t> v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = start + i;
  return v;
}

bool cell_disjoint(const Bicluster& a, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
  return sorted_intersection_size(a.rows, rows) == 0 ||
         sorted_intersection_size(a.cols, cols) == 0;
}

/// Staircase of contiguous blocks where consecutive blocks share exactly
/// overlap_cells rows x cols; non-consecutive blocks never touch.
std::vector<Bicluster> overlap_placement(const ScenarioSpec& spec, Rng& rng) {
  const auto [orows, ocols] = spec.overlap_cells;
  if (orows * 2 > spec.bic_rows || ocols * 2 > spec.bic_cols)
    throw std::runtime_error("gen_scenario: overlap larger than half the bicluster");
  const std::size_t step_r = spec.bic_rows - orows;
  const std::size_t step_c = spec.bic_cols - ocols;
  const std::size_t span_r = spec.bic_rows + (spec.num_biclusters - 1) * step_r;
  const std::size_t span_c = spec.bic_cols + (spec.num_biclusters - 1) * step_c;
  if (span_r > spec.matrix_rows || span_c > spec.matrix_cols)
    throw std::runtime_error("gen_scenario: overlapping implants do not fit");
  const std::size_t anchor_r = rng.uniform_index(spec.matrix_rows - span_r + 1);
  const std::size_t anchor_c = rng.uniform_index(spec.matrix_cols - span_c + 1);
  std::vector<Bicluster> truth;
  for (std::size_t k = 0; k < spec.num_biclusters; ++k)
    truth.emplace_back(contiguous_range(anchor_r + k * step_r, spec.bic_rows),
                       contiguous_range(anchor_c + k * step_c, spec.bic_cols));
  return truth;
}

/// Overlapping trend implants written row-centrically: one global column order
/// shared by all implants, each row's values increasing along that order over
/// every column of every implant the row belongs to. This keeps rows in the
/// shared region valid for both of their biclusters.
void implant_overlapping_trends(ExpressionMatrix& m, const std::vector<Bicluster>& truth,
                                const ImplantParams& params, Rng& rng) {
  std::vector<std::size_t> all_cols;
  for (const auto& b : truth) all_cols.insert(all_cols.end(), b.cols.begin(), b.cols.end());
  std::sort(all_cols.begin(), all_cols.end());
  all_cols.erase(std::unique(all_cols.begin(), all_cols.end()), all_cols.end());
  std::vector<std::size_t> order = all_cols;
  rng.shuffle(order);
  std::unordered_map<std::size_t, std::size_t> rank;
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;

  std::vector<std::size_t> all_rows;
  for (const auto& b : truth) all_rows.insert(all_rows.end(), b.rows.begin(), b.rows.end());
  std::sort(all_rows.begin(), all_rows.end());
  all_rows.erase(std::unique(all_rows.begin(), all_rows.end()), all_rows.end());

  std::vector<std::size_t> row_cols;
  std::vector<double> vals;
  for (std::size_t r : all_rows) {
    row_cols.clear();
    for (const auto& b : truth)
      if (std::binary_search(b.rows.begin(), b.rows.end(), r))
        row_cols.insert(row_cols.end(), b.cols.begin(), b.cols.end());
    std::sort(row_cols.begin(), row_cols.end());
    row_cols.erase(std::unique(row_cols.begin(), row_cols.end()), row_cols.end());
    std::sort(row_cols.begin(), row_cols.end(),
              [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
    vals.resize(row_cols.size());
    for (double& v : vals) v = rng.normal();
    std::sort(vals.begin(), vals.end());
    for (std::size_t k = 0; k < row_cols.size(); ++k)
      m(r, row_cols[k]) = vals[k] + params.mean_shift;
  }
}

}  // namespace

GeneratedDataset gen_scenario(const ScenarioSpec& spec) {
  spec.validate();
  ExpressionMatrix m = gen_background(spec.matrix_rows, spec.matrix_cols, spec.seed);
  Rng rng(mix_seed(spec.seed, 0xb1c5));
  std::vector<Bicluster> truth;

  if (spec.scenario == ScenarioKind::overlap) {
    if (spec.pattern != PatternKind::trend)
      throw std::invalid_argument("gen_scenario: overlap scenario supports the trend pattern only");
    truth = overlap_placement(spec, rng);
    implant_overlapping_trends(m, truth, ImplantParams{0.0, spec.mean_shift}, rng);
  } else {
    constexpr int kPlacementRetries = 1000;
    for (std::size_t k = 0; k < spec.num_biclusters; ++k) {
      const std::size_t width =
          spec.scenario == ScenarioKind::narrow ? spec.bic_cols * (k + 1) : spec.bic_cols;
      std::vector<std::size_t> rset, cset;
      if (spec.scenario == ScenarioKind::colin1000) {
        // fixed staircase so every column-count variant keeps identical truth
        const std::size_t row_start = k * (spec.bic_rows + spec.bic_rows / 2);
        const std::size_t col_start = k * (width + width / 2);
        if (row_start + spec.bic_rows > spec.matrix_rows ||
            col_start + width > spec.matrix_cols)
          throw std::runtime_error("gen_scenario: fixed-position implants do not fit");
        rset = contiguous_range(row_start, spec.bic_rows);
        cset = contiguous_range(col_start, width);
      } else {
        bool placed = false;
        for (int attempt = 0; attempt < kPlacementRetries && !placed; ++attempt) {
          rset = rng.sample_sorted(spec.matrix_rows, spec.bic_rows);
          cset = rng.sample_sorted(spec.matrix_cols, width);
          placed = std::all_of(truth.begin(), truth.end(),
                               [&](const Bicluster& b) { return cell_disjoint(b, rset, cset); });
        }
        if (!placed)
          throw std::runtime_error("gen_scenario: could not place disjoint implant " +
                                   std::to_string(k));
      }
      ImplantParams ip;
      ip.noise_sigma = 0.0;  // noise is added uniformly below
      ip.mean_shift = spec.mean_shift;
      truth.push_back(implant_pattern(m, spec.pattern, rset, cset, ip, rng));
    }
  }

  // One noise draw per cell across the whole matrix, implants included.
  if (spec.noise_sigma > 0.0) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) += rng.normal(0.0, spec.noise_sigma);
  }

  GeneratedDataset out;
  out.matrix = std::move(m);
  out.truth = BiclusterSet(std::move(truth));
  out.spec = spec;
  return out;
}

std::vector<GeneratedDataset> replicate_suite(const ScenarioSpec& spec,
                                              std::size_t n_replicates) {
  if (n_replicates == 0) throw std::invalid_argument("replicate_suite: n_replicates == 0");
  std::vector<GeneratedDataset> out;
  out.reserve(n_replicates);
  for (std::size_t i = 0; i < n_replicates; ++i) {
    ScenarioSpec s = spec;
    s.seed = spec.seed + i;
    out.push_back(gen_scenario(s));
  }
  return out;
}

namespace {

ScenarioSpec default_spec(ScenarioKind k) {
  ScenarioSpec s;
  s.scenario = k;
  switch (k) {
    case ScenarioKind::six_types:
      s.matrix_rows = 300; s.matrix_cols = 200; s.bic_rows = 10; s.bic_cols = 10;
      s.num_biclusters = 1;
      break;
    case ScenarioKind::overlap:
      s.matrix_rows = 150; s.matrix_cols = 100; s.bic_rows = 25; s.bic_cols = 25;
      s.num_biclusters = 4; s.overlap_cells = {9, 9};
      break;
    case ScenarioKind::narrow:
      s.matrix_rows = 1000; s.matrix_cols = 100; s.bic_rows = 100; s.bic_cols = 10;
      s.num_biclusters = 3;
      break;
    case ScenarioKind::noise:
      s.matrix_rows = 1000; s.matrix_cols = 100; s.bic_rows = 100; s.bic_cols = 15;
      s.num_biclusters = 3;
      break;
    case ScenarioKind::colincrease:
      s.matrix_rows = 1000; s.matrix_cols = 150; s.bic_rows = 100; s.bic_cols = 10;
      s.num_biclusters = 1;
      break;
    case ScenarioKind::colin1000:
      s.matrix_rows = 1000; s.matrix_cols = 500; s.bic_rows = 100; s.bic_cols = 20;
      s.num_biclusters = 3;
      break;
    case ScenarioKind::different:
      s.matrix_rows = 1000; s.matrix_cols = 100; s.bic_rows = 100; s.bic_cols = 15;
      s.num_biclusters = 3;
      break;
    case ScenarioKind::large_variant:
      s.matrix_rows = 20000; s.matrix_cols = 250; s.bic_rows = 500; s.bic_cols = 20;
      s.num_biclusters = 3;
      break;
  }
  return s;
}

std::string format_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::vector<ScenarioCase> scenario_cases(ScenarioKind scenario, const ScenarioSpec& base) {
  std::vector<ScenarioCase> out;
  auto push = [&](const std::string& name, const ScenarioSpec& s) {
    out.push_back(ScenarioCase{name, s});
  };
  switch (scenario) {
    case ScenarioKind::six_types: {
      for (auto pattern : {PatternKind::trend, PatternKind::column_const, PatternKind::row_const,
                           PatternKind::shift, PatternKind::scale, PatternKind::shift_scale}) {
        for (std::size_t mult : {1u, 2u, 3u}) {
          ScenarioSpec s = base;
          s.pattern = pattern;
          s.bic_rows = base.bic_rows * mult;
          s.bic_cols = base.bic_cols * mult;
          push(std::string("six_types_") + to_string(pattern) + "_s" + std::to_string(s.bic_rows),
               s);
        }
      }
      break;
    }
    case ScenarioKind::overlap: {
      for (std::size_t o : {0u, 3u, 6u, 9u}) {
        ScenarioSpec s = base;
        s.overlap_cells = {o, o};
        push("overlap_o" + std::to_string(o), s);
      }
      break;
    }
    case ScenarioKind::narrow: {
      // three independent sampling units sharing the fixed width progression
      for (std::size_t k = 1; k <= 3; ++k) {
        ScenarioSpec s = base;
        s.seed = base.seed + 7919 * k;
        push("narrow_case" + std::to_string(k), s);
      }
      break;
    }
    case ScenarioKind::noise: {
      for (double sigma : {0.0, 0.1, 0.2, 0.3}) {
        ScenarioSpec s = base;
        s.noise_sigma = sigma;
        push("noise_sigma" + format_double(sigma), s);
      }
      break;
    }
    case ScenarioKind::colincrease: {
      for (std::size_t w : {10u, 30u, 60u, 120u}) {
        ScenarioSpec s = base;
        s.bic_cols = w;
        push("colincrease_w" + std::to_string(w), s);
      }
      break;
    }
    case ScenarioKind::colin1000: {
      for (std::size_t c : {500u, 1000u, 1500u, 2000u}) {
        ScenarioSpec s = base;
        s.matrix_cols = c;
        push("colin1000_c" + std::to_string(c), s);
      }
      break;
    }
    case ScenarioKind::different: {
      for (double shift : {0.0, 2.0, 4.0, 6.0}) {
        ScenarioSpec s = base;
        s.mean_shift = shift;
        push("different_m" + format_double(shift), s);
      }
      break;
    }
    case ScenarioKind::large_variant: {
      push("large_variant", base);
      break;
    }
  }
  return out;
}

ScenarioSpec scenario_defaults(ScenarioKind k) { return default_spec(k); }

}  // namespace bicseek
