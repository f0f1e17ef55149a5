#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "bicseek/evolution.hpp"
#include "bicseek/io.hpp"

namespace bicseek {

/// Runs the search on one dataset and scores it against its ground truth.
/// The engine is asked for exactly as many biclusters as the truth contains.
/// Any failure is folded into the record (blank metrics, termination
/// "budget") instead of propagating.
BenchRecord bench_dataset(const std::filesystem::path& matrix_path,
                          const std::filesystem::path& truth_path,
                          const std::string& dataset_label, const std::string& scenario,
                          std::size_t replicate, const EvolutionParams& base);

struct BenchOptions {
  EvolutionParams params;
  unsigned jobs = 1;  // datasets evaluated concurrently
};

/// Walks every manifest.json under root and benches each replicate of each
/// case. Record order follows the sorted manifest paths, so the output is
/// stable regardless of --jobs.
std::vector<BenchRecord> bench_tree(const std::filesystem::path& root, const BenchOptions& opts,
                                    std::ostream* progress = nullptr);

}  // namespace bicseek
