#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bicseek/bench.hpp"
#include "bicseek/datagen.hpp"
#include "bicseek/evolution.hpp"
#include "bicseek/io.hpp"
#include "bicseek/metrics.hpp"

namespace {

using namespace bicseek;

constexpr int kExitOk = 0;
constexpr int kExitIoError = 1;
constexpr int kExitBadFlags = 2;
constexpr int kExitUndefinedMetric = 3;

struct EngineFlags {
  EvolutionParams params;
  std::vector<double> op_weights;
};

void add_engine_flags(CLI::App& cmd, EngineFlags& f) {
  cmd.add_option("-n,--iterations", f.params.max_iterations, "Generation budget")
      ->capture_default_str();
  cmd.add_option("-b,--biclusters", f.params.num_biclusters, "Requested bicluster count")
      ->capture_default_str();
  cmd.add_option("--approx", f.params.trend.approx, "Approximate-trend tolerance")
      ->capture_default_str();
  cmd.add_flag("--negative-trends", f.params.trend.negative_trends,
               "Also accept reversed-order rows");
  cmd.add_option("--overlap", f.params.overlap_threshold,
                 "Max cell Jaccard between top-rank entries")
      ->capture_default_str();
  cmd.add_option("--seed", f.params.seed, "Random seed")->capture_default_str();
  cmd.add_option("--threads", f.params.threads, "Fitness worker threads (0 = all cores)")
      ->capture_default_str();
  cmd.add_option("--pop-size", f.params.population_size, "Population size")
      ->capture_default_str();
  cmd.add_option("--elite", f.params.elite_count, "Elite count")->capture_default_str();
  cmd.add_option("--tournament", f.params.tournament_size, "Tournament size")
      ->capture_default_str();
  cmd.add_option("--tabu-hits", f.params.tabu_hits_threshold,
                 "Tabu hit threshold (0 = population size)")
      ->capture_default_str();
  cmd.add_option("--min-rows", f.params.trend.min_rows, "Support floor")->capture_default_str();
  cmd.add_option("--col-cap", f.params.trend.col_cap, "Column bonus cap")->capture_default_str();
  cmd.add_option("--penalty-base", f.params.penalty_base, "Column-crowding penalty base")
      ->capture_default_str();
  cmd.add_option("--init-len-min", f.params.init_len_min, "Min initial chromosome length")
      ->capture_default_str();
  cmd.add_option("--init-len-max", f.params.init_len_max, "Max initial chromosome length")
      ->capture_default_str();
  cmd.add_option("--op-weights", f.op_weights,
                 "Operator weights: insertion deletion substitution swap crossover")
      ->expected(5);
}

void finish_engine_flags(EngineFlags& f) {
  if (!f.op_weights.empty())
    for (std::size_t i = 0; i < 5; ++i) f.params.operator_weights[i] = f.op_weights[i];
}

std::filesystem::path report_path_for(const std::filesystem::path& out) {
  std::filesystem::path p = out;
  if (p.extension() == ".json") p.replace_extension();
  p += ".report.json";
  return p;
}

int do_run(const std::string& input, const std::string& output, EngineFlags& flags) {
  finish_engine_flags(flags);
  const ExpressionMatrix m = parse_matrix_tsv(input);
  const RunResult result = run(m, flags.params);
  write_biclusters(output, result.biclusters);
  write_run_report(report_path_for(output), result.report);
  std::cerr << "found " << result.biclusters.size() << " bicluster(s) in "
            << result.report.generations << " generations (" << result.report.termination
            << ", " << result.report.wall_time_seconds << "s)\n";
  return kExitOk;
}

struct GenerateFlags {
  std::string scenario;
  std::string out_dir;
  std::string pattern;
  std::size_t rows = 0, cols = 0, bic_rows = 0, bic_cols = 0, num_biclusters = 0;
  std::size_t overlap_rows = 0, overlap_cols = 0;
  double noise = 0.0, mean_shift = 0.0;
  std::size_t replicates = 5;
  std::uint64_t seed = 1;
};

int do_generate(const CLI::App& cmd, GenerateFlags& g) {
  const ScenarioKind kind = scenario_from_string(g.scenario);
  ScenarioSpec base = scenario_defaults(kind);
  base.seed = g.seed;
  if (cmd.count("--pattern")) base.pattern = pattern_from_string(g.pattern);
  if (cmd.count("--rows")) base.matrix_rows = g.rows;
  if (cmd.count("--cols")) base.matrix_cols = g.cols;
  if (cmd.count("--bic-rows")) base.bic_rows = g.bic_rows;
  if (cmd.count("--bic-cols")) base.bic_cols = g.bic_cols;
  if (cmd.count("--biclusters")) base.num_biclusters = g.num_biclusters;
  if (cmd.count("--overlap-rows")) base.overlap_cells.first = g.overlap_rows;
  if (cmd.count("--overlap-cols")) base.overlap_cells.second = g.overlap_cols;
  if (cmd.count("--noise")) base.noise_sigma = g.noise;
  if (cmd.count("--mean-shift")) base.mean_shift = g.mean_shift;

  const std::filesystem::path root(g.out_dir);
  std::filesystem::create_directories(root);

  Manifest manifest;
  manifest.scenario = to_string(kind);
  for (const ScenarioCase& sc : scenario_cases(kind, base)) {
    CaseEntry entry;
    entry.name = sc.name;
    entry.spec = sc.spec;
    std::filesystem::create_directories(root / sc.name);
    for (std::size_t i = 0; i < g.replicates; ++i) {
      ScenarioSpec spec = sc.spec;
      spec.seed = sc.spec.seed + i;
      const GeneratedDataset ds = gen_scenario(spec);
      ReplicateEntry rep;
      rep.index = i;
      rep.seed = spec.seed;
      rep.matrix_path = sc.name + "/rep" + std::to_string(i) + ".tsv";
      rep.truth_path = sc.name + "/rep" + std::to_string(i) + ".truth.json";
      write_matrix_tsv(root / rep.matrix_path, ds.matrix);
      write_biclusters(root / rep.truth_path, ds.truth);
      entry.replicates.push_back(std::move(rep));
    }
    manifest.cases.push_back(std::move(entry));
    std::cerr << "generated " << sc.name << " (" << g.replicates << " replicates)\n";
  }
  write_manifest(root / "manifest.json", manifest);
  return kExitOk;
}

int do_eval(const std::string& found_path, const std::string& truth_path,
            const std::string& metric) {
  const BiclusterSet found = parse_biclusters(found_path);
  const BiclusterSet truth = parse_biclusters(truth_path);

  const bool want_ce = metric == "ce" || metric == "all";
  const bool want_recovery = metric == "recovery" || metric == "all";
  const bool want_relevance = metric == "relevance" || metric == "all";
  if (want_ce && found.empty() && truth.empty()) {
    std::cerr << "ce is undefined: both sets are empty\n";
    return kExitUndefinedMetric;
  }
  if (want_recovery && truth.empty()) {
    std::cerr << "recovery is undefined: truth set is empty\n";
    return kExitUndefinedMetric;
  }
  if (want_relevance && found.empty()) {
    std::cerr << "relevance is undefined: found set is empty\n";
    return kExitUndefinedMetric;
  }

  std::string out = "{";
  auto append = [&](const char* name, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s\"%s\":%.6f", out.size() > 1 ? "," : "", name, value);
    out += buf;
  };
  if (want_ce) append("ce", clustering_error(found, truth));
  if (want_recovery) append("recovery", recovery(found, truth));
  if (want_relevance) append("relevance", relevance(found, truth));
  out += "}";
  std::cout << out << "\n";
  return kExitOk;
}

int do_bench(const std::string& dir, const std::string& out_csv, const std::string& summary_csv,
             unsigned jobs, EngineFlags& flags) {
  finish_engine_flags(flags);
  BenchOptions opts;
  opts.params = flags.params;
  opts.jobs = jobs;
  const std::vector<BenchRecord> records = bench_tree(dir, opts, &std::cerr);
  write_bench_csv(out_csv, records);
  if (!summary_csv.empty()) write_summary_csv(summary_csv, summarize_records(records));
  std::cerr << records.size() << " dataset(s) benched -> " << out_csv << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evolutionary search for trend-preserving biclusters, with benchmark tooling"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "Search one matrix for biclusters");
  std::string run_input, run_output;
  EngineFlags run_flags;
  run_cmd->add_option("-i,--input", run_input, "Input matrix TSV")->required();
  run_cmd->add_option("-o,--output", run_output, "Output bicluster JSON")->required();
  add_engine_flags(*run_cmd, run_flags);

  auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic benchmark tree");
  GenerateFlags gen_flags;
  gen_cmd->add_option("--scenario", gen_flags.scenario,
                      "six_types|overlap|narrow|noise|colincrease|colin1000|different|large_variant")
      ->required();
  gen_cmd->add_option("--out", gen_flags.out_dir, "Output directory")->required();
  gen_cmd->add_option("--pattern", gen_flags.pattern,
                      "trend|column_const|row_const|shift|scale|shift_scale");
  gen_cmd->add_option("--rows", gen_flags.rows, "Matrix rows");
  gen_cmd->add_option("--cols", gen_flags.cols, "Matrix columns");
  gen_cmd->add_option("--bic-rows", gen_flags.bic_rows, "Implant rows");
  gen_cmd->add_option("--bic-cols", gen_flags.bic_cols, "Implant columns");
  gen_cmd->add_option("--biclusters", gen_flags.num_biclusters, "Implants per dataset");
  gen_cmd->add_option("--overlap-rows", gen_flags.overlap_rows, "Shared rows between consecutive implants");
  gen_cmd->add_option("--overlap-cols", gen_flags.overlap_cols, "Shared columns between consecutive implants");
  gen_cmd->add_option("--noise", gen_flags.noise, "Additive noise sigma");
  gen_cmd->add_option("--mean-shift", gen_flags.mean_shift, "Implant mean shift");
  gen_cmd->add_option("--replicates", gen_flags.replicates, "Replicates per case")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen_flags.seed, "Base seed")->capture_default_str();

  auto* eval_cmd = app.add_subcommand("eval", "Score a found set against ground truth");
  std::string eval_found, eval_truth, eval_metric = "all";
  eval_cmd->add_option("--found", eval_found, "Found biclusters (JSON)")->required();
  eval_cmd->add_option("--truth", eval_truth, "Ground truth (JSON or text dialect)")->required();
  eval_cmd->add_option("--metric", eval_metric, "ce|recovery|relevance|all")
      ->check(CLI::IsMember({"ce", "recovery", "relevance", "all"}))
      ->capture_default_str();

  auto* bench_cmd = app.add_subcommand("bench", "Run the search over a generated tree");
  std::string bench_dir, bench_out, bench_summary;
  unsigned bench_jobs = 1;
  EngineFlags bench_flags;
  bench_cmd->add_option("--dir", bench_dir, "Root of generated scenarios")->required();
  bench_cmd->add_option("--out", bench_out, "Results CSV")->required();
  bench_cmd->add_option("--summary", bench_summary, "Optional per-scenario summary CSV");
  bench_cmd->add_option("--jobs", bench_jobs, "Datasets to bench concurrently")
      ->capture_default_str();
  add_engine_flags(*bench_cmd, bench_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadFlags;
  }

  try {
    if (run_cmd->parsed()) return do_run(run_input, run_output, run_flags);
    if (gen_cmd->parsed()) return do_generate(*gen_cmd, gen_flags);
    if (eval_cmd->parsed()) return do_eval(eval_found, eval_truth, eval_metric);
    if (bench_cmd->parsed()) return do_bench(bench_dir, bench_out, bench_summary, bench_jobs, bench_flags);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFlags;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  }
  return kExitOk;
}
