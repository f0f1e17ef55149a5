#include "bicseek/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <ostream>
#include <thread>

#include "bicseek/metrics.hpp"

namespace bicseek {

BenchRecord bench_dataset(const std::filesystem::path& matrix_path,
                          const std::filesystem::path& truth_path,
                          const std::string& dataset_label, const std::string& scenario,
                          std::size_t replicate, const EvolutionParams& base) {
  BenchRecord rec;
  rec.dataset_path = dataset_label;
  rec.scenario = scenario;
  rec.replicate = replicate;
  rec.termination = "budget";
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const ExpressionMatrix m = parse_matrix_tsv(matrix_path);
    const BiclusterSet truth = parse_biclusters(truth_path);
    EvolutionParams params = base;
    if (!truth.empty()) params.num_biclusters = truth.size();
    const RunResult result = run(m, params);
    rec.generations = result.report.generations;
    rec.termination = result.report.termination;
    rec.ce = clustering_error(result.biclusters, truth);
    if (!truth.empty()) rec.recovery = recovery(result.biclusters, truth);
    if (!result.biclusters.empty()) rec.relevance = relevance(result.biclusters, truth);
  } catch (const std::exception&) {
    rec.ce.reset();
    rec.recovery.reset();
    rec.relevance.reset();
  }
  rec.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

namespace {

struct BenchTask {
  std::filesystem::path matrix;
  std::filesystem::path truth;
  std::string label;
  std::string scenario;
  std::size_t replicate = 0;
};

std::vector<BenchTask> collect_tasks(const std::filesystem::path& root) {
  std::vector<std::filesystem::path> manifests;
  if (std::filesystem::is_regular_file(root / "manifest.json"))
    manifests.push_back(root / "manifest.json");
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root))
    if (entry.is_regular_file() && entry.path().filename() == "manifest.json" &&
        entry.path() != root / "manifest.json")
      manifests.push_back(entry.path());
  std::sort(manifests.begin(), manifests.end());

  std::vector<BenchTask> tasks;
  for (const auto& mpath : manifests) {
    const Manifest manifest = parse_manifest(mpath);
    const std::filesystem::path dir = mpath.parent_path();
    for (const auto& c : manifest.cases) {
      for (const auto& r : c.replicates) {
        BenchTask t;
        t.matrix = dir / r.matrix_path;
        t.truth = dir / r.truth_path;
        t.label = std::filesystem::proximate(t.matrix, root).generic_string();
        t.scenario = c.name;
        t.replicate = r.index;
        tasks.push_back(std::move(t));
      }
    }
  }
  return tasks;
}

}  // namespace

std::vector<BenchRecord> bench_tree(const std::filesystem::path& root, const BenchOptions& opts,
                                    std::ostream* progress) {
  const std::vector<BenchTask> tasks = collect_tasks(root);
  std::vector<BenchRecord> records(tasks.size());
  std::mutex progress_mu;

  auto run_task = [&](std::size_t i) {
    const BenchTask& t = tasks[i];
    records[i] = bench_dataset(t.matrix, t.truth, t.label, t.scenario, t.replicate, opts.params);
    if (progress != nullptr) {
      std::lock_guard lk(progress_mu);
      *progress << t.label << ": ce="
                << (records[i].ce ? std::to_string(*records[i].ce) : std::string("-")) << " ("
                << records[i].wall_time_seconds << "s, " << records[i].termination << ")\n";
    }
  };

  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size()));
    workers.reserve(n);
    for (unsigned w = 0; w < n; ++w) {
      workers.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          run_task(i);
        }
      });
    }
    for (auto& w : workers) w.join();
  }
  return records;
}

}  // namespace bicseek
