// Command-line front end: solve, bench, gen, verify.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mincut/bench.hpp"
#include "mincut/dimacs.hpp"
#include "mincut/generator.hpp"
#include "mincut/verify.hpp"

namespace {

using namespace mincut;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct SolverFlags {
  std::string algo = "hpf";
  std::string variant = "highest";
  std::int64_t k = 0;
};

SolverOptions to_options(const std::string& algo_name, const SolverFlags& flags) {
  SolverOptions options;
  const auto algo = parse_algorithm(algo_name);
  if (!algo) throw InputError("unknown algorithm '" + algo_name + "' (prf, hpf, bk, par)");
  options.algo = *algo;
  const auto variant = parse_hpf_variant(flags.variant);
  if (!variant) throw InputError("unknown variant '" + flags.variant + "' (highest, lowest)");
  options.hpf_variant = *variant;
  if (flags.k < 0) throw InputError("--k must be at least 1");
  if (flags.k > 0) options.k = flags.k;
  return options;
}

void add_solver_flags(CLI::App* cmd, SolverFlags& flags) {
  cmd->add_option("--variant", flags.variant, "HPF label selection: highest or lowest");
  cmd->add_option("--k", flags.k, "PAR path bound (default ceil(sqrt(m)))");
}

ProblemInstance parse_source(const InstanceSource& source) {
  std::istringstream in(source.dimacs_text);
  return parse_dimacs(in, source.name);
}

void print_report_comments(const BenchRecord& r, std::ostream& out) {
  const SolveReport& s = r.report;
  out << "c algo " << to_string(r.algo) << " variant " << r.variant << '\n';
  out << "c t_init " << s.timing.t_init << " t_minCut " << s.timing.t_min_cut << " t_maxFlow "
      << s.timing.t_max_flow << " reps " << s.timing.repetitions << '\n';
  out << "c peak_mem_bytes ";
  if (s.peak_memory_bytes) out << *s.peak_memory_bytes; else out << "n/a";
  out << " (" << to_string(s.memory_source) << ")\n";
  const OperationCounters& k = s.counters;
  out << "c pushes " << k.pushes << " relabels " << k.relabels << " global " << k.global_relabels
      << " gaps " << k.gap_relabels << " mergers " << k.mergers << " augmentations "
      << k.augmentations << " orphans " << k.orphans << " retreats " << k.retreats << " cutoffs "
      << k.cutoffs << '\n';
}

int run_solve(const std::string& file, const SolverFlags& flags, int reps, bool min_cut_only) {
  const InstanceSource source = load_instance_source(file);
  const SolverOptions options = to_options(flags.algo, flags);
  BenchOptions bench;
  bench.repetitions = reps;
  bench.min_cut_only = min_cut_only;
  const BenchRecord record = run_instance(source, options, bench);
  print_report_comments(record, std::cout);

  const ProblemInstance instance = parse_source(source);
  const SolveResult result = solve(instance.network, options, min_cut_only);
  if (min_cut_only) {
    if (cut_capacity(instance.network, result.cut) != result.cut.value) {
      throw VerificationFailure("cut value does not match its recomputed capacity");
    }
    write_cut_solution(result.cut, std::cout);
  } else {
    write_flow_solution(instance.network, *result.flow, std::cout);
  }
  return kExitOk;
}

int run_bench(const std::vector<std::string>& inputs, const std::vector<std::string>& algos,
              const SolverFlags& flags, const BenchOptions& bench, const std::string& format,
              const std::string& output) {
  if (format != "table" && format != "csv") throw InputError("--out must be table or csv");
  std::vector<BenchRecord> records;
  for (const std::string& input : inputs) {
    const InstanceSource source = load_instance_source(input);
    for (const std::string& algo : algos) {
      records.push_back(run_instance(source, to_options(algo, flags), bench));
    }
  }
  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw InputError("cannot write " + output);
  }
  std::ostream& out = output.empty() ? std::cout : file;

  if (format == "csv") {
    write_records_csv(records, out);
  } else {
    write_records_table(records, out);
  }
  if (algos.size() >= 2) {
    const std::vector<SlowdownRow> rows = slowdown_table(records);
    if (format == "table") {
      out << '\n';
      write_slowdown_table(rows, out);
      out << '\n';
      write_summary_table(summary_averages(rows), out);
    }
  }
  return kExitOk;
}

int run_verify(const std::string& file, const SolverFlags& flags) {
  const InstanceSource source = load_instance_source(file);
  const ProblemInstance instance = parse_source(source);
  const FlowNetwork& net = instance.network;
  const SolveResult result = solve(net, to_options(flags.algo, flags));
  const VerificationReport report = certify(net, *result.flow, result.cut);
  std::cout << "flow " << report.flow_value << " cut " << report.cut_value.value_or(-1)
            << (report.certified ? " certified" : " NOT certified");
  if (!report.violation.empty()) std::cout << " (" << report.violation << ')';
  std::cout << '\n';
  bool ok = report.certified;
  if (net.node_count() <= kBruteForceMaxNodes) {
    const BruteForceCut oracle = brute_force_min_cut(net);
    const bool match = oracle.value == result.cut.value;
    std::cout << "oracle " << oracle.value << (match ? " match" : " MISMATCH") << '\n';
    ok = ok && match;
  }
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-flow / min-cut solvers and benchmark harness"};
  app.require_subcommand(1);

  SolverFlags flags;
  std::string file;
  int reps = 1;
  bool min_cut_only = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one DIMACS instance and print the solution");
  solve_cmd->add_option("file", file, "DIMACS file or generator spec")->required();
  solve_cmd->add_option("--algo", flags.algo, "prf, hpf, bk or par");
  solve_cmd->add_option("--reps", reps, "Timed repetitions")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--min-cut-only", min_cut_only, "Skip flow recovery; print the cut");
  add_solver_flags(solve_cmd, flags);

  std::vector<std::string> inputs;
  std::vector<std::string> algos{"prf", "hpf", "bk", "par"};
  BenchOptions bench;
  std::string format = "table";
  std::string output;
  auto* bench_cmd = app.add_subcommand("bench", "Time solvers over instances");
  bench_cmd->add_option("inputs", inputs, "DIMACS files or generator specs")->required();
  bench_cmd->add_option("--algos", algos, "Comma-separated solvers")->delimiter(',');
  bench_cmd->add_option("--reps", bench.repetitions, "Runs per instance; the first is a warm-up")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--min-cut-only", bench.min_cut_only, "Skip flow recovery");
  bench_cmd->add_flag("--isolate", bench.isolate, "Run each solver in a forked child");
  bench_cmd->add_option("--out", format, "table or csv");
  bench_cmd->add_option("--output", output, "Write to a file instead of stdout");
  add_solver_flags(bench_cmd, flags);

  std::string spec_text;
  std::string kind = "grid2d";
  std::string dims;
  int nbh = 0;
  std::int64_t cap = 10;
  std::uint64_t seed = 1;
  double noise = 0.0;
  std::string decimate;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic DIMACS instance");
  gen_cmd->add_option("--spec", spec_text, "Full spec, e.g. grid3d:64x64x32:n6:c10:seed=1");
  gen_cmd->add_option("--kind", kind, "grid2d, grid3d or stereo");
  gen_cmd->add_option("--dims", dims, "WxH or WxHxD");
  gen_cmd->add_option("--nbh", nbh, "Neighborhood size");
  gen_cmd->add_option("--cap", cap, "Maximum capacity c");
  gen_cmd->add_option("--seed", seed, "PRNG seed");
  gen_cmd->add_option("--noise", noise, "Fraction of flipped terminal sides");
  gen_cmd->add_option("--decimate", decimate, "Axes to halve, e.g. xy");
  gen_cmd->add_option("--out", gen_out, "Output file (stdout if omitted)");

  SolverFlags verify_flags;
  std::string verify_file;
  auto* verify_cmd = app.add_subcommand("verify", "Solve, certify and compare with the brute-force oracle");
  verify_cmd->add_option("file", verify_file, "DIMACS file or generator spec")->required();
  verify_cmd->add_option("--algo", verify_flags.algo, "prf, hpf, bk or par");
  add_solver_flags(verify_cmd, verify_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(file, flags, reps, min_cut_only);
    if (*bench_cmd) return run_bench(inputs, algos, flags, bench, format, output);
    if (*verify_cmd) return run_verify(verify_file, verify_flags);
    if (*gen_cmd) {
      if (spec_text.empty()) {
        if (dims.empty()) throw InputError("gen needs --spec or --dims");
        std::ostringstream s;
        s << kind << ':' << dims;
        if (nbh > 0) s << ":n" << nbh;
        s << ":c" << cap << ":seed=" << seed;
        if (noise != 0.0) s << ":noise=" << noise;
        if (!decimate.empty()) s << ":decimate=" << decimate;
        spec_text = s.str();
      }
      const std::string text = generate_dimacs(parse_instance_spec(spec_text));
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(gen_out, std::ios::binary);
        if (!(out << text)) throw InputError("cannot write " + gen_out);
      }
      return kExitOk;
    }
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
