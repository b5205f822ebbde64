#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bandrec/graph.hpp"
#include "bandrec/instance_gen.hpp"

namespace bandrec {

enum class Algorithm { hall, naive };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

enum class RunStatus { solved, tle, error };

std::string_view to_string(RunStatus status);

/// One CSV row. verdict and min_runtime_ns are set exactly when solved.
struct BenchRecord {
  std::string instance_id;
  int n = 0;
  int k = 0;
  CaseKind case_kind = CaseKind::affirmative;
  Algorithm algorithm = Algorithm::hall;
  std::uint64_t seed = 0;
  RunStatus status = RunStatus::error;
  std::optional<bool> verdict;
  std::optional<std::int64_t> min_runtime_ns;

  bool operator==(const BenchRecord&) const = default;
};

struct BenchConfig {
  std::vector<int> sizes{10, 12};
  /// k = n + offset.
  std::vector<int> affirmative_offsets{-6, -4, -2};
  std::vector<int> negative_offsets{-6, -4};
  bool run_affirmative = true;
  bool run_negative = true;
  int cases = 5;
  std::chrono::nanoseconds timeout = std::chrono::seconds(10);
  int repeats = 5;
  std::uint64_t seed = 0;
  std::vector<Algorithm> algorithms{Algorithm::hall};
};

/// Throws InvalidInput for an empty or inconsistent configuration.
void validate(const BenchConfig& config);

struct PlannedInstance {
  std::string instance_id;
  int n = 0;
  int k = 0;
  CaseKind kind = CaseKind::affirmative;
  std::uint64_t seed = 0;

  bool operator==(const PlannedInstance&) const = default;
};

/// Instances in run order: by n, then kind, then k offset, then index.
/// Seeds come from derive_seed(config.seed, n, k, kind, index).
std::vector<PlannedInstance> plan_instances(const BenchConfig& config);

GeneratedCase generate_instance(const PlannedInstance& instance);

struct TimedRun {
  RunStatus status = RunStatus::error;
  bool verdict = false;
  std::int64_t min_runtime_ns = 0;
  std::string error;
};

/**
 * Runs `algorithm` on (g, k) in a forked child. The first run must finish
 * within `timeout` or the child is killed and the run is a TLE; its verdict
 * is reported. `repeats` further timed runs follow, each under the same
 * limit, and the minimum of their durations is kept.
 */
TimedRun run_isolated(const Graph& g, int k, Algorithm algorithm,
                      std::chrono::nanoseconds timeout, int repeats);

using RecordSink = std::function<void(const BenchRecord&)>;

/// Generates every planned instance and times each configured algorithm on
/// it. Records are also passed to `sink` as they complete.
std::vector<BenchRecord> run_bench(const BenchConfig& config, const RecordSink& sink = {});

inline constexpr std::string_view kCsvHeader =
    "instance_id,n,k,case_kind,algorithm,seed,status,verdict,min_runtime_ns";

std::string to_csv_row(const BenchRecord& record);
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
/// Throws std::runtime_error naming the line on any schema violation.
std::vector<BenchRecord> parse_bench_csv(std::string_view text);

/// Per (case kind, algorithm) block of "(n,k) | solved | tle | mean±std ms"
/// rows; std is the sample standard deviation over solved instances.
std::string format_summary(const std::vector<BenchRecord>& records);

}  // namespace bandrec
