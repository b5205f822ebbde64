#include "bandrec/bench.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <sstream>

#include "bandrec/baselines.hpp"
#include "bandrec/recognition.hpp"

namespace bandrec {

std::string_view to_string(Algorithm algorithm) {
  return algorithm == Algorithm::hall ? "hall" : "naive";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "hall") return Algorithm::hall;
  if (name == "naive") return Algorithm::naive;
  return std::nullopt;
}

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::solved:
      return "solved";
    case RunStatus::tle:
      return "tle";
    case RunStatus::error:
      return "error";
  }
  return "error";
}

void validate(const BenchConfig& config) {
  if (config.sizes.empty()) throw InvalidInput("no instance sizes configured");
  if (!config.run_affirmative && !config.run_negative) throw InvalidInput("no case kinds selected");
  if (config.algorithms.empty()) throw InvalidInput("no algorithms selected");
  if (config.cases < 1) throw InvalidInput("cases per (n, k) must be at least 1");
  if (config.repeats < 3) throw InvalidInput("timing needs at least 3 repetitions");
  if (config.timeout.count() <= 0) throw InvalidInput("timeout must be positive");
  for (int n : config.sizes) {
    if (n < 2) throw InvalidInput("instance size must be at least 2");
    if (config.run_affirmative) {
      if (config.affirmative_offsets.empty()) throw InvalidInput("no affirmative k offsets");
      for (int off : config.affirmative_offsets) {
        const int k = n + off;
        if (off > -2 || k < 2 || k < (n - 1) / 2) {
          throw InvalidInput("affirmative offset " + std::to_string(off) + " invalid for n=" +
                             std::to_string(n));
        }
      }
    }
    if (config.run_negative) {
      if (config.negative_offsets.empty()) throw InvalidInput("no negative k offsets");
      for (int off : config.negative_offsets) {
        const int k = n + off;
        if (off > -4 || k < (n - 1) / 2) {
          throw InvalidInput("negative offset " + std::to_string(off) + " invalid for n=" +
                             std::to_string(n));
        }
      }
    }
  }
}

std::vector<PlannedInstance> plan_instances(const BenchConfig& config) {
  std::vector<PlannedInstance> plan;
  auto add_kind = [&](int n, CaseKind kind, const std::vector<int>& offsets) {
    for (int off : offsets) {
      const int k = n + off;
      for (int i = 0; i < config.cases; ++i) {
        PlannedInstance p;
        p.n = n;
        p.k = k;
        p.kind = kind;
        p.seed = derive_seed(config.seed, n, k, static_cast<int>(kind), i);
        p.instance_id = "n" + std::to_string(n) + "_k" + std::to_string(k) + "_" +
                        std::string(to_string(kind)) + "_" + std::to_string(i);
        plan.push_back(std::move(p));
      }
    }
  };
  for (int n : config.sizes) {
    if (config.run_affirmative) add_kind(n, CaseKind::affirmative, config.affirmative_offsets);
    if (config.run_negative) add_kind(n, CaseKind::negative, config.negative_offsets);
  }
  return plan;
}

GeneratedCase generate_instance(const PlannedInstance& instance) {
  return instance.kind == CaseKind::affirmative
             ? generate_affirmative_case(instance.n, instance.k, instance.seed)
             : generate_negative_case(instance.n, instance.k, instance.seed);
}

namespace {

struct Message {
  std::int32_t ok;
  std::int32_t verdict;
  std::int64_t runtime_ns;
  char error[240];
};

bool run_algorithm(const Graph& g, int k, Algorithm algorithm) {
  return algorithm == Algorithm::hall ? recognize(g, k).verdict
                                      : naive_recognition(g, k).verdict;
}

[[noreturn]] void child_main(int fd, const Graph& g, int k, Algorithm algorithm, int runs) {
  for (int i = 0; i < runs; ++i) {
    Message msg{};
    try {
      const auto start = std::chrono::steady_clock::now();
      const bool verdict = run_algorithm(g, k, algorithm);
      const auto stop = std::chrono::steady_clock::now();
      msg.ok = 1;
      msg.verdict = verdict ? 1 : 0;
      msg.runtime_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    } catch (const std::exception& e) {
      msg.ok = 0;
      std::snprintf(msg.error, sizeof msg.error, "%s", e.what());
    }
    // Messages are smaller than PIPE_BUF, so each write is atomic.
    if (write(fd, &msg, sizeof msg) != static_cast<ssize_t>(sizeof msg) || !msg.ok) break;
  }
  close(fd);
  _exit(0);
}

enum class ReadOutcome { message, timeout, closed };

ReadOutcome read_message(int fd, Message& msg, std::chrono::steady_clock::time_point deadline) {
  auto* bytes = reinterpret_cast<char*>(&msg);
  std::size_t got = 0;
  while (got < sizeof msg) {
    const auto left = deadline - std::chrono::steady_clock::now();
    if (left <= std::chrono::nanoseconds::zero()) return ReadOutcome::timeout;
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(left).count();
    timespec ts{static_cast<time_t>(ns / 1'000'000'000), static_cast<long>(ns % 1'000'000'000)};
    pollfd pfd{fd, POLLIN, 0};
    const int ready = ppoll(&pfd, 1, &ts, nullptr);
    if (ready < 0) {
      if (errno == EINTR) continue;
      return ReadOutcome::closed;
    }
    if (ready == 0) return ReadOutcome::timeout;
    const ssize_t n = read(fd, bytes + got, sizeof msg - got);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) return ReadOutcome::closed;
    got += static_cast<std::size_t>(n);
  }
  return ReadOutcome::message;
}

}  // namespace

TimedRun run_isolated(const Graph& g, int k, Algorithm algorithm,
                      std::chrono::nanoseconds timeout, int repeats) {
  TimedRun result;
  int fds[2];
  if (pipe(fds) != 0) {
    result.error = std::string("pipe: ") + std::strerror(errno);
    return result;
  }
  std::fflush(nullptr);
  const pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    result.error = std::string("fork: ") + std::strerror(errno);
    return result;
  }
  if (pid == 0) {
    close(fds[0]);
    child_main(fds[1], g, k, algorithm, repeats + 1);
  }
  close(fds[1]);

  bool killed = false;
  auto stop_child = [&] {
    if (!killed) kill(pid, SIGKILL);
    killed = true;
  };

  Message msg{};
  switch (read_message(fds[0], msg, std::chrono::steady_clock::now() + timeout)) {
    case ReadOutcome::timeout:
      stop_child();
      result.status = RunStatus::tle;
      break;
    case ReadOutcome::closed:
      result.error = "child exited without reporting";
      break;
    case ReadOutcome::message:
      if (!msg.ok) {
        result.error = msg.error;
      } else if (std::chrono::nanoseconds(msg.runtime_ns) > timeout) {
        stop_child();
        result.status = RunStatus::tle;
      } else {
        result.status = RunStatus::solved;
        result.verdict = msg.verdict != 0;
        std::int64_t best = -1;
        for (int i = 0; i < repeats; ++i) {
          Message rep{};
          if (read_message(fds[0], rep, std::chrono::steady_clock::now() + timeout) !=
                  ReadOutcome::message ||
              !rep.ok) {
            stop_child();
            break;
          }
          best = best < 0 ? rep.runtime_ns : std::min(best, rep.runtime_ns);
        }
        // Every timed repetition lost: fall back to the verification run.
        result.min_runtime_ns = best < 0 ? msg.runtime_ns : best;
      }
      break;
  }
  close(fds[0]);
  if (result.status != RunStatus::solved) stop_child();
  int wstatus = 0;
  while (waitpid(pid, &wstatus, 0) < 0 && errno == EINTR) {
  }
  return result;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config, const RecordSink& sink) {
  validate(config);
  std::vector<BenchRecord> records;
  for (const PlannedInstance& inst : plan_instances(config)) {
    std::optional<GeneratedCase> generated;
    try {
      generated = generate_instance(inst);
    } catch (const GenerationFailure&) {
    }
    for (Algorithm algorithm : config.algorithms) {
      BenchRecord rec;
      rec.instance_id = inst.instance_id;
      rec.n = inst.n;
      rec.k = inst.k;
      rec.case_kind = inst.kind;
      rec.algorithm = algorithm;
      rec.seed = inst.seed;
      if (generated) {
        const TimedRun run = run_isolated(generated->graph, inst.k, algorithm, config.timeout,
                                          config.repeats);
        rec.status = run.status;
        if (run.status == RunStatus::solved) {
          rec.verdict = run.verdict;
          rec.min_runtime_ns = run.min_runtime_ns;
        }
      }
      if (sink) sink(rec);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string to_csv_row(const BenchRecord& r) {
  std::string row = r.instance_id + "," + std::to_string(r.n) + "," + std::to_string(r.k) + "," +
                    std::string(to_string(r.case_kind)) + "," + std::string(to_string(r.algorithm)) +
                    "," + std::to_string(r.seed) + "," + std::string(to_string(r.status)) + ",";
  if (r.verdict) row += *r.verdict ? "true" : "false";
  row += ",";
  if (r.min_runtime_ns) row += std::to_string(*r.min_runtime_ns);
  return row;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) out << to_csv_row(r) << '\n';
}

namespace {

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.emplace_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
T parse_number(const std::string& field, int line_no) {
  T value{};
  std::istringstream in(field);
  in >> value;
  if (field.empty() || !in || !in.eof()) {
    throw std::runtime_error("csv line " + std::to_string(line_no) + ": bad number \"" + field + "\"");
  }
  return value;
}

}  // namespace

std::vector<BenchRecord> parse_bench_csv(std::string_view text) {
  std::vector<BenchRecord> records;
  std::size_t start = 0;
  int line_no = 0;
  bool header_seen = false;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!header_seen) {
      if (line != kCsvHeader) throw std::runtime_error("csv line 1: unexpected header");
      header_seen = true;
      continue;
    }
    auto fail = [&](const std::string& what) {
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": " + what);
    };
    const auto f = split_fields(line);
    if (f.size() != 9) fail("expected 9 fields");
    BenchRecord r;
    r.instance_id = f[0];
    if (r.instance_id.empty()) fail("empty instance_id");
    r.n = parse_number<int>(f[1], line_no);
    r.k = parse_number<int>(f[2], line_no);
    if (f[3] == "affirmative") {
      r.case_kind = CaseKind::affirmative;
    } else if (f[3] == "negative") {
      r.case_kind = CaseKind::negative;
    } else {
      fail("bad case_kind \"" + f[3] + "\"");
    }
    const auto algorithm = parse_algorithm(f[4]);
    if (!algorithm) fail("bad algorithm \"" + f[4] + "\"");
    r.algorithm = *algorithm;
    r.seed = parse_number<std::uint64_t>(f[5], line_no);
    if (f[6] == "solved") {
      r.status = RunStatus::solved;
    } else if (f[6] == "tle") {
      r.status = RunStatus::tle;
    } else if (f[6] == "error") {
      r.status = RunStatus::error;
    } else {
      fail("bad status \"" + f[6] + "\"");
    }
    if (r.status == RunStatus::solved) {
      if (f[7] != "true" && f[7] != "false") fail("solved row needs verdict true|false");
      r.verdict = f[7] == "true";
      r.min_runtime_ns = parse_number<std::int64_t>(f[8], line_no);
    } else if (!f[7].empty() || !f[8].empty()) {
      fail("unsolved row must leave verdict and min_runtime_ns empty");
    }
    records.push_back(std::move(r));
  }
  if (!header_seen) throw std::runtime_error("csv: missing header");
  return records;
}

std::string format_summary(const std::vector<BenchRecord>& records) {
  struct Cell {
    int solved = 0;
    int tle = 0;
    std::vector<double> ms;
  };
  using Block = std::vector<std::pair<std::pair<int, int>, Cell>>;
  std::map<std::pair<int, int>, Block> blocks;  // (kind, algorithm) -> rows in first-seen order

  for (const auto& r : records) {
    auto& block = blocks[{static_cast<int>(r.case_kind), static_cast<int>(r.algorithm)}];
    auto it = std::find_if(block.begin(), block.end(),
                           [&](const auto& row) { return row.first == std::pair{r.n, r.k}; });
    if (it == block.end()) {
      block.push_back({{r.n, r.k}, {}});
      it = block.end() - 1;
    }
    Cell& cell = it->second;
    if (r.status == RunStatus::solved) {
      ++cell.solved;
      cell.ms.push_back(static_cast<double>(*r.min_runtime_ns) / 1e6);
    } else if (r.status == RunStatus::tle) {
      ++cell.tle;
    }
  }

  std::ostringstream out;
  char buf[128];
  for (const auto& [key, block] : blocks) {
    out << "# " << to_string(static_cast<CaseKind>(key.first)) << " / "
        << to_string(static_cast<Algorithm>(key.second)) << '\n';
    out << "(n,k) | solved | tle | mean±std ms\n";
    for (const auto& [nk, cell] : block) {
      std::string time = "-";
      if (!cell.ms.empty()) {
        double mean = 0;
        for (double x : cell.ms) mean += x;
        mean /= static_cast<double>(cell.ms.size());
        if (cell.ms.size() == 1) {
          std::snprintf(buf, sizeof buf, "%.4g", mean);
        } else {
          double ss = 0;
          for (double x : cell.ms) ss += (x - mean) * (x - mean);
          const double sd = std::sqrt(ss / static_cast<double>(cell.ms.size() - 1));
          std::snprintf(buf, sizeof buf, "%.4g±%.2g", mean, sd);
        }
        time = buf;
      }
      out << "(" << nk.first << "," << nk.second << ") | " << cell.solved << " | " << cell.tle
          << " | " << time << '\n';
    }
    out << '\n';
  }
  out << "hall timings include alpha/gamma bound computation; each time is the minimum over repeated runs\n";
  return out.str();
}

}  // namespace bandrec
