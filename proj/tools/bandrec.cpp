// bandrec: high-bandwidth recognition, bounds, exact bandwidth, instance
// generation and benchmarking from the command line.
//
// Exit status: 0 = yes / success, 1 = bandwidth exceeds k, 2 = error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bandrec/baselines.hpp"
#include "bandrec/bench.hpp"
#include "bandrec/bounds.hpp"
#include "bandrec/graph_io.hpp"
#include "bandrec/instance_gen.hpp"
#include "bandrec/recognition.hpp"

namespace {

using namespace bandrec;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::chrono::nanoseconds parse_duration(const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidInput("bad duration \"" + text + "\"");
  }
  const std::string unit = text.substr(used);
  double scale = 1e9;
  if (unit == "ns") {
    scale = 1;
  } else if (unit == "us") {
    scale = 1e3;
  } else if (unit == "ms") {
    scale = 1e6;
  } else if (unit == "s" || unit.empty()) {
    scale = 1e9;
  } else if (unit == "min") {
    scale = 60e9;
  } else {
    throw InvalidInput("bad duration unit in \"" + text + "\"");
  }
  if (!(value > 0)) throw InvalidInput("duration must be positive");
  return std::chrono::nanoseconds(static_cast<std::int64_t>(value * scale));
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BANDREC_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const auto seed = std::stoull(env, &used);
      if (used == std::string(env).size()) return seed;
    } catch (const std::exception&) {
    }
    throw InvalidInput(std::string("BANDREC_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

int cmd_recognize(const std::string& path, int k, const std::string& algorithm, bool verify) {
  const Graph g = parse_graph_file(path);
  const auto algo = parse_algorithm(algorithm);
  if (!algo) throw InvalidInput("unknown algorithm \"" + algorithm + "\"");
  const RecognitionResult result =
      *algo == Algorithm::hall ? recognize(g, k) : naive_recognition(g, k);
  if (!result.verdict) {
    std::cout << "verdict=false reason=" << to_string(*result.negative_reason) << '\n';
    return kExitNo;
  }
  std::cout << "verdict=true\n";
  if (verify) {
    std::cout << "bandwidth=" << layout_bandwidth(g, *result.certificate) << '\n';
  }
  const auto order = result.certificate->order();
  for (std::size_t p = 0; p < order.size(); ++p) {
    std::cout << p << ':' << order[p] << '\n';
  }
  return kExitYes;
}

int cmd_bounds(const std::string& path) {
  const BandwidthBounds b = compute_bounds(parse_graph_file(path));
  std::cout << "alpha=" << b.alpha << " gamma=" << b.gamma << " combined=" << b.combined << '\n';
  return kExitYes;
}

int cmd_bandwidth(const std::string& path) {
  std::cout << "bandwidth=" << exact_bandwidth_bruteforce(parse_graph_file(path)) << '\n';
  return kExitYes;
}

struct GenOptions {
  std::string kind = "affirmative";
  int n = 0;
  int k = -1;
  int psi = -1;
  double p = 0.5;
  std::optional<std::uint64_t> seed;
  std::string output;
};

int cmd_gen(const GenOptions& opt) {
  const std::uint64_t seed = resolve_seed(opt.seed);
  std::optional<Graph> g;
  if (opt.kind == "banded") {
    if (opt.psi < 0) throw InvalidInput("gen banded requires --psi");
    g = random_banded_matrix(GenParams{opt.n, opt.psi, opt.p, seed});
    std::cerr << "kind=banded n=" << opt.n << " psi=" << opt.psi << " p=" << opt.p
              << " seed=" << seed << '\n';
  } else {
    if (opt.k < 0) throw InvalidInput("gen " + opt.kind + " requires --k");
    GeneratedCase c = opt.kind == "affirmative"   ? generate_affirmative_case(opt.n, opt.k, seed)
                      : opt.kind == "negative"    ? generate_negative_case(opt.n, opt.k, seed)
                                                  : throw InvalidInput("unknown kind " + opt.kind);
    std::cerr << "kind=" << to_string(c.meta.kind) << " n=" << c.meta.n << " k=" << c.meta.k
              << " psi=" << c.meta.psi << " p=" << c.meta.p << " seed=" << c.meta.seed
              << " attempts=" << c.meta.attempts << '\n';
    g = std::move(c.graph);
  }
  if (opt.output.empty() || opt.output == "-") {
    std::cout << format_graph(*g);
  } else {
    write_graph_file(*g, opt.output);
  }
  return kExitYes;
}

struct BenchOptions {
  std::vector<int> sizes{10, 12};
  std::vector<int> k_offsets;
  std::vector<std::string> kinds{"affirmative", "negative"};
  std::vector<std::string> algorithms{"hall"};
  int cases = 5;
  int repeats = 5;
  std::string timeout = "10s";
  std::optional<std::uint64_t> seed;
  std::string output;
  std::string format = "table";
};

int cmd_bench(const BenchOptions& opt) {
  BenchConfig config;
  config.sizes = opt.sizes;
  if (!opt.k_offsets.empty()) {
    config.affirmative_offsets = opt.k_offsets;
    config.negative_offsets = opt.k_offsets;
  }
  config.run_affirmative = config.run_negative = false;
  for (const auto& kind : opt.kinds) {
    if (kind == "affirmative") {
      config.run_affirmative = true;
    } else if (kind == "negative") {
      config.run_negative = true;
    } else {
      throw InvalidInput("unknown case kind \"" + kind + "\"");
    }
  }
  config.algorithms.clear();
  for (const auto& name : opt.algorithms) {
    const auto algo = parse_algorithm(name);
    if (!algo) throw InvalidInput("unknown algorithm \"" + name + "\"");
    config.algorithms.push_back(*algo);
  }
  config.cases = opt.cases;
  config.repeats = opt.repeats;
  config.timeout = parse_duration(opt.timeout);
  config.seed = resolve_seed(opt.seed);
  validate(config);

  std::ofstream csv;
  if (!opt.output.empty()) {
    csv.open(opt.output, std::ios::binary | std::ios::trunc);
    if (!csv) throw std::runtime_error("cannot write " + opt.output);
    csv << kCsvHeader << '\n';
  }
  if (opt.format == "csv") std::cout << kCsvHeader << '\n';

  const auto records = run_bench(config, [&](const BenchRecord& r) {
    if (csv.is_open()) csv << to_csv_row(r) << '\n' << std::flush;
    if (opt.format == "csv") std::cout << to_csv_row(r) << '\n' << std::flush;
  });
  if (csv.is_open() && !csv.flush()) throw std::runtime_error("write failed for " + opt.output);
  if (opt.format == "table") std::cout << format_summary(records);
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-bandwidth graph recognition"};
  app.require_subcommand(1);

  std::string graph_path;
  int k = 0;
  std::string algorithm = "hall";
  bool verify = false;
  auto* rec = app.add_subcommand("recognize", "Decide whether bandwidth <= k");
  rec->add_option("graph", graph_path, "Edge-list graph file")->required();
  rec->add_option("--k", k, "Bandwidth threshold")->required();
  rec->add_option("--algorithm", algorithm, "hall or naive")->check(CLI::IsMember({"hall", "naive"}));
  rec->add_flag("--verify", verify, "Also print the certificate's layout bandwidth");

  auto* bnd = app.add_subcommand("bounds", "Print the alpha and gamma lower bounds");
  bnd->add_option("graph", graph_path, "Edge-list graph file")->required();

  auto* bw = app.add_subcommand("bandwidth", "Exact bandwidth by exhaustive search (n <= 9)");
  bw->add_option("graph", graph_path, "Edge-list graph file")->required();

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "Generate a benchmark instance");
  gen->add_option("--kind", gen_opt.kind, "affirmative, negative or banded")
      ->check(CLI::IsMember({"affirmative", "negative", "banded"}));
  gen->add_option("--n", gen_opt.n, "Node count")->required();
  gen->add_option("--k", gen_opt.k, "Bandwidth threshold (affirmative/negative)");
  gen->add_option("--psi", gen_opt.psi, "Band width (banded)");
  gen->add_option("--p", gen_opt.p, "Edge probability (banded)");
  gen->add_option("--seed", gen_opt.seed, "RNG seed (falls back to BANDREC_SEED)");
  gen->add_option("--output", gen_opt.output, "Output file (default stdout)");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "Timeout-governed benchmark");
  bench->add_option("--sizes", bench_opt.sizes, "Node counts")->delimiter(',');
  bench->add_option("--k-offsets", bench_opt.k_offsets,
                    "k - n offsets for every kind (default -6,-4,-2 / -6,-4)")
      ->delimiter(',');
  bench->add_option("--kinds", bench_opt.kinds, "affirmative and/or negative")->delimiter(',');
  bench->add_option("--algorithms", bench_opt.algorithms, "hall and/or naive")->delimiter(',');
  bench->add_option("--cases", bench_opt.cases, "Instances per (n, k, kind)");
  bench->add_option("--repeats", bench_opt.repeats, "Timed repetitions per run (>= 3)");
  bench->add_option("--timeout", bench_opt.timeout, "Per-run limit, e.g. 10s, 500ms, 1ns");
  bench->add_option("--seed", bench_opt.seed, "Base seed (falls back to BANDREC_SEED)");
  bench->add_option("--output", bench_opt.output, "CSV output path");
  bench->add_option("--format", bench_opt.format, "Stdout format")
      ->check(CLI::IsMember({"csv", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (rec->parsed()) return cmd_recognize(graph_path, k, algorithm, verify);
    if (bnd->parsed()) return cmd_bounds(graph_path);
    if (bw->parsed()) return cmd_bandwidth(graph_path);
    if (gen->parsed()) return cmd_gen(gen_opt);
    if (bench->parsed()) return cmd_bench(bench_opt);
  } catch (const OutOfRegime& e) {
    std::cout << "verdict=error reason=" << to_string(NegativeReason::out_of_regime) << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
