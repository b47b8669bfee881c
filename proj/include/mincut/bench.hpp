#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mincut/report.hpp"
#include "mincut/solver.hpp"

namespace mincut {

// A result that fails its own checks: flow value differs from cut value,
// repetitions disagree, or solvers disagree on the cut value.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance bytes held in memory so that every repetition parses the same
// text inside its timed init phase.
struct InstanceSource {
  std::string name;
  std::string dimacs_text;
};

// A DIMACS file path, or a generator spec such as
// "grid3d:64x64x32:n6:c10:seed=1". Throws InputError.
InstanceSource load_instance_source(std::string_view arg);

struct BenchOptions {
  // Total runs. With more than one, the first is a warm-up and is left out
  // of the means.
  int repetitions = 5;
  bool min_cut_only = false;
  // Run every repetition in a forked child and collect its report.
  bool isolate = false;
};

struct BenchRecord {
  std::string instance;
  NodeId n = 0;
  ArcId m = 0;
  Algorithm algo = Algorithm::kHpf;
  std::string variant;
  SolveReport report;
};

// Times parse + build + solver setup (t_init), the cut phase (t_minCut) and
// flow recovery (t_maxFlow, 0 with min_cut_only). Throws VerificationFailure
// if repetitions disagree or a recovered flow is infeasible or differs from
// the cut value.
BenchRecord run_instance(const InstanceSource& source, const SolverOptions& solver,
                         const BenchOptions& options);

// (t_init + t_minCut) of each solver over the fastest one. Throws
// std::invalid_argument for fewer than two times or a zero minimum.
std::vector<double> slowdown_factors(std::span<const double> times);

struct SlowdownRow {
  std::string instance;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<std::string> solvers;
  std::vector<double> times;
  std::vector<double> slowdowns;
  Capacity cut_value = 0;
};

SlowdownRow make_slowdown_row(std::string instance, std::int64_t n, std::int64_t m,
                              std::vector<std::string> solvers, std::vector<double> times);

// One row per instance, in first-appearance order. Throws
// std::invalid_argument if an instance has fewer than two solvers and
// VerificationFailure if their cut values differ.
std::vector<SlowdownRow> slowdown_table(const std::vector<BenchRecord>& records);

struct PartitionSummary {
  std::string fastest;
  std::size_t instances = 0;
  std::vector<std::string> solvers;
  std::vector<double> mean_time;
  std::vector<double> mean_slowdown;
};

// Groups instances by their fastest solver (first in column order on ties)
// and averages run-times and slowdowns per group. Empty groups are omitted.
// Throws std::invalid_argument on empty input or mismatched solver columns.
std::vector<PartitionSummary> summary_averages(const std::vector<SlowdownRow>& rows);

void write_records_csv(const std::vector<BenchRecord>& records, std::ostream& out);
void write_records_table(const std::vector<BenchRecord>& records, std::ostream& out);
void write_slowdown_csv(const std::vector<SlowdownRow>& rows, std::ostream& out);
void write_slowdown_table(const std::vector<SlowdownRow>& rows, std::ostream& out);
void write_summary_table(const std::vector<PartitionSummary>& parts, std::ostream& out);

}  // namespace mincut
