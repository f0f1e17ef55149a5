#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bicseek/bicluster.hpp"
#include "bicseek/matrix.hpp"
#include "bicseek/rng.hpp"

namespace bicseek {

enum class PatternKind { trend, column_const, row_const, shift, scale, shift_scale };

enum class ScenarioKind {
  six_types,
  overlap,
  narrow,
  noise,
  colincrease,
  colin1000,
  different,
  large_variant
};

const char* to_string(PatternKind p);
const char* to_string(ScenarioKind s);
PatternKind pattern_from_string(const std::string& s);
ScenarioKind scenario_from_string(const std::string& s);

/// Declarative description of one synthetic benchmark case.
struct ScenarioSpec {
  ScenarioKind scenario = ScenarioKind::six_types;
  PatternKind pattern = PatternKind::trend;
  std::size_t matrix_rows = 300;
  std::size_t matrix_cols = 200;
  std::size_t bic_rows = 30;
  std::size_t bic_cols = 30;
  std::size_t num_biclusters = 1;
  /// Shared rows x cols between consecutive implants (overlap scenario only).
  std::pair<std::size_t, std::size_t> overlap_cells{0, 0};
  double noise_sigma = 0.0;
  double mean_shift = 0.0;
  std::uint64_t seed = 1;

  void validate() const;
};

struct GeneratedDataset {
  ExpressionMatrix matrix;
  BiclusterSet truth;
  ScenarioSpec spec;
};

/// Offsets applied to every implanted cell, plus the ranges of the per-row
/// shift/scale coefficients.
struct ImplantParams {
  double noise_sigma = 0.0;
  double mean_shift = 0.0;
  double scale_lo = 0.5;
  double scale_hi = 2.0;
};

/// rows x cols of i.i.d. standard normal values, fixed by the seed.
ExpressionMatrix gen_background(std::size_t rows, std::size_t cols, std::uint64_t seed);

/// Overwrites the submatrix rows x cols with the given pattern, then adds
/// mean_shift and N(0, noise_sigma^2) noise to every implant cell. Returns the
/// ground-truth bicluster.
Bicluster implant_pattern(ExpressionMatrix& m, PatternKind pattern,
                          const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols, const ImplantParams& params,
                          Rng& rng);

/// Background plus num_biclusters implants with machine-readable ground truth.
/// Implants are cell-disjoint except in the overlap scenario, where
/// consecutive implants share exactly overlap_cells rows x cols. Background
/// cells receive the same N(0, noise_sigma^2) noise as implant cells.
/// Throws when the implants cannot be placed.
GeneratedDataset gen_scenario(const ScenarioSpec& spec);

/// n datasets from the same spec with seeds seed+0 .. seed+n-1.
std::vector<GeneratedDataset> replicate_suite(const ScenarioSpec& spec, std::size_t n_replicates);

/// One named test case of a benchmark scenario.
struct ScenarioCase {
  std::string name;
  ScenarioSpec spec;
};

/// The benchmark catalogue: expands a scenario into its test cases (pattern and
/// size grid for six_types, overlap steps, widths, noise levels, column counts,
/// mean shifts), each derived from the base spec.
std::vector<ScenarioCase> scenario_cases(ScenarioKind scenario, const ScenarioSpec& base);

/// Stock dimensions for each scenario, the starting point for CLI overrides.
ScenarioSpec scenario_defaults(ScenarioKind k);

}  // namespace bicseek
