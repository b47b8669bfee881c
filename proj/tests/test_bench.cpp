#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mincut/bench.hpp"
#include "mincut/dimacs.hpp"
#include "mincut/memory.hpp"
#include "support.hpp"

using namespace mincut;

namespace {

SolverOptions solver_options(Algorithm algo) {
  SolverOptions o;
  o.algo = algo;
  return o;
}

InstanceSource source_of(const fixtures::Raw& raw, std::string name) {
  std::ostringstream text;
  write_dimacs(raw.build(), text);
  return {std::move(name), text.str()};
}

BenchRecord record(std::string instance, Algorithm algo, double time, Capacity cut) {
  BenchRecord r;
  r.instance = std::move(instance);
  r.algo = algo;
  r.report.cut_value = cut;
  r.report.timing.t_min_cut = time;
  return r;
}

}  // namespace

// Reference run-times: one row per instance, columns prf, hpf, bk.
std::vector<SlowdownRow> load_reference_rows() {
  std::ifstream in(MINCUT_TEST_DATA_DIR "/reference_runtimes.csv");
  REQUIRE(in);
  std::string line;
  std::getline(in, line);
  std::vector<SlowdownRow> rows;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string name, n, m, prf, hpf, bk;
    std::getline(fields, name, ',');
    std::getline(fields, n, ',');
    std::getline(fields, m, ',');
    std::getline(fields, prf, ',');
    std::getline(fields, hpf, ',');
    std::getline(fields, bk, ',');
    rows.push_back(make_slowdown_row(name, std::stoll(n), std::stoll(m), {"prf", "hpf", "bk"},
                                     {std::stod(prf), std::stod(hpf), std::stod(bk)}));
  }
  return rows;
}

TEST_SUITE("bench-harness") {

TEST_CASE("single arc, five repetitions") {
  for (const Algorithm algo : {Algorithm::kPrf, Algorithm::kHpf, Algorithm::kBk, Algorithm::kPar}) {
    const BenchRecord r = run_instance(source_of(fixtures::g1(), "g1"), solver_options(algo), BenchOptions{});
    CHECK(r.report.cut_value == 5);
    CHECK(r.report.flow_value == 5);
    CHECK(r.report.timing.t_init > 0.0);
    CHECK(r.report.timing.t_min_cut > 0.0);
    CHECK(r.report.timing.t_max_flow > 0.0);
    CHECK(r.report.timing.repetitions == 5);
    CHECK(r.n == 2);
    CHECK(r.m == 2);
  }
}

TEST_CASE("min-cut-only skips flow recovery") {
  BenchOptions options;
  options.min_cut_only = true;
  const BenchRecord r = run_instance(source_of(fixtures::g2(), "g2"), SolverOptions{}, options);
  CHECK(r.report.cut_value == 2);
  CHECK_FALSE(r.report.flow_value.has_value());
  CHECK(r.report.timing.t_max_flow == 0.0);
}

TEST_CASE("runs are deterministic") {
  const InstanceSource src = load_instance_source("grid2d:24x24:n8:c30:seed=3");
  for (const Algorithm algo : {Algorithm::kPrf, Algorithm::kHpf, Algorithm::kBk, Algorithm::kPar}) {
    const BenchRecord a = run_instance(src, solver_options(algo), BenchOptions{2});
    const BenchRecord b = run_instance(src, solver_options(algo), BenchOptions{2});
    CHECK(a.report.cut_value == b.report.cut_value);
    CHECK(a.report.counters == b.report.counters);
  }
}

TEST_CASE("isolated runs report the same result") {
  BenchOptions options;
  options.repetitions = 2;
  options.isolate = true;
  const InstanceSource src = source_of(fixtures::g2(), "g2");
  const BenchRecord isolated = run_instance(src, solver_options(Algorithm::kBk), options);
  options.isolate = false;
  const BenchRecord local = run_instance(src, solver_options(Algorithm::kBk), options);
  CHECK(isolated.instance == "g2");
  CHECK(isolated.report.cut_value == 2);
  CHECK(isolated.report.counters == local.report.counters);
  CHECK(isolated.report.peak_memory_bytes.has_value());
}

TEST_CASE("bad instance arguments") {
  CHECK_THROWS_AS(load_instance_source("/no/such/file.dimacs"), InputError);
  CHECK_THROWS_AS(load_instance_source("grid2d:0x4"), InputError);
  CHECK_THROWS_AS(run_instance({"bad", "p max 2 1\n"}, SolverOptions{}, BenchOptions{}), InputError);
}

TEST_CASE("slowdown factors") {
  const std::vector<double> times{1.55, 0.76, 0.62};
  const std::vector<double> s = slowdown_factors(times);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == doctest::Approx(2.50).epsilon(0.002));
  CHECK(s[1] == doctest::Approx(1.23).epsilon(0.002));
  CHECK(s[2] == 1.0);

  const std::vector<double> tie{10.0, 10.0};
  CHECK(slowdown_factors(tie) == std::vector<double>{1.0, 1.0});

  const std::vector<double> one{0.5};
  CHECK_THROWS_AS(slowdown_factors(one), std::invalid_argument);
  const std::vector<double> zero{0.0, 1.0};
  CHECK_THROWS_AS(slowdown_factors(zero), std::invalid_argument);
}

TEST_CASE("slowdown table groups by instance") {
  const std::vector<BenchRecord> records{
      record("a", Algorithm::kPrf, 2.0, 7), record("b", Algorithm::kPrf, 1.0, 3),
      record("a", Algorithm::kHpf, 1.0, 7), record("b", Algorithm::kHpf, 4.0, 3)};
  const std::vector<SlowdownRow> rows = slowdown_table(records);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].instance == "a");
  CHECK(rows[0].slowdowns == std::vector<double>{2.0, 1.0});
  CHECK(rows[0].cut_value == 7);
  CHECK(rows[1].slowdowns == std::vector<double>{1.0, 4.0});
}

TEST_CASE("slowdown table rejects bad groups") {
  CHECK_THROWS_AS(slowdown_table({record("a", Algorithm::kPrf, 1.0, 7)}), std::invalid_argument);
  CHECK_THROWS_AS(slowdown_table({record("a", Algorithm::kPrf, 1.0, 7), record("a", Algorithm::kBk, 1.0, 8)}),
                  VerificationFailure);
}

TEST_CASE("summary of the reference run-times") {
  const std::vector<PartitionSummary> parts = summary_averages(load_reference_rows());
  REQUIRE(parts.size() == 2);
  const PartitionSummary& hpf = parts[0];
  const PartitionSummary& bk = parts[1];
  CHECK(hpf.fastest == "hpf");
  CHECK(hpf.instances == 37);
  CHECK(bk.fastest == "bk");
  CHECK(bk.instances == 14);

  CHECK(hpf.mean_time[0] == doctest::Approx(184.87).epsilon(0.0005));
  CHECK(hpf.mean_time[1] == doctest::Approx(72.25).epsilon(0.0005));
  CHECK(hpf.mean_time[2] == doctest::Approx(99.69).epsilon(0.0005));
  CHECK(hpf.mean_slowdown[1] == 1.0);
  CHECK(hpf.mean_slowdown[2] == doctest::Approx(1.39).epsilon(0.005));

  CHECK(bk.mean_time[0] == doctest::Approx(185.96).epsilon(0.0005));
  CHECK(bk.mean_time[1] == doctest::Approx(53.53).epsilon(0.0005));
  CHECK(bk.mean_time[2] == doctest::Approx(48.00).epsilon(0.0005));
  CHECK(bk.mean_slowdown[2] == 1.0);
  CHECK(bk.mean_slowdown[1] == doctest::Approx(1.18).epsilon(0.005));
}

TEST_CASE("summary edge cases") {
  SlowdownRow single;
  single.instance = "x";
  single.solvers = {"hpf"};
  single.times = {0.3};
  single.slowdowns = {1.0};
  const std::vector<PartitionSummary> parts = summary_averages({single});
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].instances == 1);
  CHECK(parts[0].mean_time == std::vector<double>{0.3});
  CHECK(parts[0].mean_slowdown == std::vector<double>{1.0});

  CHECK_THROWS_AS(summary_averages({}), std::invalid_argument);
  SlowdownRow other = single;
  other.solvers = {"bk"};
  CHECK_THROWS_AS(summary_averages({single, other}), std::invalid_argument);
}

TEST_CASE("memory samples") {
  const MemorySample m = sample_resident_memory();
  REQUIRE(m.bytes.has_value());
  CHECK(*m.bytes > 0);
  if (m.source == MemorySource::kStatm) CHECK(*m.bytes % page_size_bytes() == 0);

  PeakMemoryTracker tracker;
  CHECK_FALSE(tracker.peak().bytes.has_value());
  tracker.sample();
  CHECK(tracker.peak().bytes.has_value());
}

TEST_CASE("CSV output") {
  const BenchRecord r = run_instance(source_of(fixtures::g1(), "g1"), solver_options(Algorithm::kPar),
                                     BenchOptions{1});
  std::ostringstream out;
  write_records_csv({r}, out);
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header ==
        "instance,n,m,algo,variant,t_init,t_minCut,t_maxFlow,cut_value,peak_mem_bytes,pushes,relabels,"
        "global_relabels,gap_relabels,mergers,augmentations,orphans,retreats,cutoffs,flow_value,mem_source,"
        "repetitions");
  CHECK(row.starts_with("g1,2,2,par,k=2,"));
  CHECK(row.ends_with(",1"));
}

}  // TEST_SUITE
