#include "mincut/bench.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mincut/dimacs.hpp"
#include "mincut/generator.hpp"
#include "mincut/memory.hpp"
#include "mincut/verify.hpp"

namespace mincut {

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

bool looks_like_spec(std::string_view arg) {
  return arg.starts_with("grid2d:") || arg.starts_with("grid3d:") || arg.starts_with("stereo:");
}

std::string format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

void print_aligned(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string pad(width[c] - row[c].size(), ' ');
      if (c > 0) out << "  ";
      if (c == 0) out << row[c] << pad; else out << pad << row[c];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

nlohmann::json to_json(const BenchRecord& r) {
  const OperationCounters& k = r.report.counters;
  nlohmann::json j;
  j["instance"] = r.instance;
  j["n"] = r.n;
  j["m"] = r.m;
  j["algo"] = to_string(r.algo);
  j["variant"] = r.variant;
  j["cut_value"] = r.report.cut_value;
  j["flow_value"] = r.report.flow_value ? nlohmann::json(*r.report.flow_value) : nlohmann::json();
  j["t_init"] = r.report.timing.t_init;
  j["t_min_cut"] = r.report.timing.t_min_cut;
  j["t_max_flow"] = r.report.timing.t_max_flow;
  j["repetitions"] = r.report.timing.repetitions;
  j["peak_memory_bytes"] =
      r.report.peak_memory_bytes ? nlohmann::json(*r.report.peak_memory_bytes) : nlohmann::json();
  j["memory_source"] = static_cast<int>(r.report.memory_source);
  j["counters"] = {k.pushes, k.relabels, k.global_relabels, k.gap_relabels, k.mergers,
                   k.augmentations, k.orphans, k.retreats, k.cutoffs};
  return j;
}

BenchRecord from_json(const nlohmann::json& j) {
  BenchRecord r;
  r.instance = j.at("instance").get<std::string>();
  r.n = j.at("n").get<NodeId>();
  r.m = j.at("m").get<ArcId>();
  r.algo = *parse_algorithm(j.at("algo").get<std::string>());
  r.variant = j.at("variant").get<std::string>();
  r.report.cut_value = j.at("cut_value").get<Capacity>();
  if (!j.at("flow_value").is_null()) r.report.flow_value = j.at("flow_value").get<Capacity>();
  r.report.timing.t_init = j.at("t_init").get<double>();
  r.report.timing.t_min_cut = j.at("t_min_cut").get<double>();
  r.report.timing.t_max_flow = j.at("t_max_flow").get<double>();
  r.report.timing.repetitions = j.at("repetitions").get<int>();
  if (!j.at("peak_memory_bytes").is_null()) {
    r.report.peak_memory_bytes = j.at("peak_memory_bytes").get<std::uint64_t>();
  }
  r.report.memory_source = static_cast<MemorySource>(j.at("memory_source").get<int>());
  const auto c = j.at("counters").get<std::vector<std::uint64_t>>();
  OperationCounters& k = r.report.counters;
  k.pushes = c.at(0);
  k.relabels = c.at(1);
  k.global_relabels = c.at(2);
  k.gap_relabels = c.at(3);
  k.mergers = c.at(4);
  k.augmentations = c.at(5);
  k.orphans = c.at(6);
  k.retreats = c.at(7);
  k.cutoffs = c.at(8);
  return r;
}

BenchRecord run_in_process(const InstanceSource& source, const SolverOptions& solver,
                           const BenchOptions& options) {
  if (options.repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
  BenchRecord record;
  record.instance = source.name;
  record.algo = solver.algo;
  PeakMemoryTracker memory;
  double sum_init = 0, sum_cut = 0, sum_flow = 0;
  int measured = 0;

  for (int rep = 0; rep < options.repetitions; ++rep) {
    const auto t0 = Clock::now();
    std::istringstream in(source.dimacs_text);
    ProblemInstance instance = parse_dimacs(in, source.name);
    const FlowNetwork& net = instance.network;
    auto impl = make_solver(net, solver);
    const auto t1 = Clock::now();
    memory.sample();
    const CutSolution cut = impl->min_cut();
    const auto t2 = Clock::now();
    memory.sample();
    std::optional<Capacity> value;
    if (!options.min_cut_only) {
      const FlowState flow = impl->max_flow();
      const VerificationReport check = check_feasible_flow(net, flow);
      if (!check.feasible) throw VerificationFailure("recovered flow is infeasible: " + check.violation);
      value = check.flow_value;
      if (*value != cut.value) {
        throw VerificationFailure("flow value " + std::to_string(*value) + " differs from cut value " +
                                  std::to_string(cut.value));
      }
    }
    const auto t3 = Clock::now();
    memory.sample();

    const OperationCounters counters = impl->counters();
    if (rep == 0) {
      record.n = net.node_count();
      record.m = net.arc_count();
      record.variant = variant_label(solver, net);
      record.report.cut_value = cut.value;
      record.report.flow_value = value;
      record.report.counters = counters;
    } else if (cut.value != record.report.cut_value || value != record.report.flow_value ||
               !(counters == record.report.counters)) {
      throw VerificationFailure("repetitions of " + std::string(to_string(solver.algo)) + " on " +
                                source.name + " disagree");
    }
    const bool warm_up = options.repetitions > 1 && rep == 0;
    if (!warm_up) {
      sum_init += seconds(t0, t1);
      sum_cut += seconds(t1, t2);
      sum_flow += options.min_cut_only ? 0.0 : seconds(t2, t3);
      ++measured;
    }
  }
  TimingBreakdown& timing = record.report.timing;
  timing.t_init = sum_init / measured;
  timing.t_min_cut = sum_cut / measured;
  timing.t_max_flow = sum_flow / measured;
  timing.repetitions = options.repetitions;
  record.report.peak_memory_bytes = memory.peak().bytes;
  record.report.memory_source = memory.peak().source;
  return record;
}

BenchRecord run_isolated(const InstanceSource& source, const SolverOptions& solver,
                         const BenchOptions& options) {
  int fds[2];
  if (pipe(fds) != 0) throw std::runtime_error("pipe failed");
  const pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("fork failed");
  if (pid == 0) {
    close(fds[0]);
    nlohmann::json reply;
    try {
      BenchOptions inner = options;
      inner.isolate = false;
      reply["record"] = to_json(run_in_process(source, solver, inner));
    } catch (const VerificationFailure& e) {
      reply["verification_error"] = e.what();
    } catch (const std::exception& e) {
      reply["error"] = e.what();
    }
    const std::string text = reply.dump();
    std::size_t done = 0;
    while (done < text.size()) {
      const ssize_t w = write(fds[1], text.data() + done, text.size() - done);
      if (w <= 0) break;
      done += static_cast<std::size_t>(w);
    }
    close(fds[1]);
    _exit(0);
  }
  close(fds[1]);
  std::string text;
  char buf[4096];
  ssize_t got;
  while ((got = read(fds[0], buf, sizeof buf)) > 0) text.append(buf, static_cast<std::size_t>(got));
  close(fds[0]);
  int status = 0;
  waitpid(pid, &status, 0);
  if (text.empty()) throw std::runtime_error("isolated run produced no report");
  const nlohmann::json reply = nlohmann::json::parse(text);
  if (reply.contains("verification_error")) {
    throw VerificationFailure(reply["verification_error"].get<std::string>());
  }
  if (reply.contains("error")) throw std::runtime_error(reply["error"].get<std::string>());
  return from_json(reply.at("record"));
}

}  // namespace

InstanceSource load_instance_source(std::string_view arg) {
  InstanceSource source;
  const std::filesystem::path path{std::string(arg)};
  if (std::filesystem::is_regular_file(path)) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    source.name = path.stem().string();
    source.dimacs_text = std::move(text).str();
    return source;
  }
  if (looks_like_spec(arg)) {
    const InstanceSpec spec = parse_instance_spec(arg);
    source.name = to_string(spec);
    source.dimacs_text = generate_dimacs(spec);
    return source;
  }
  throw InputError("no such file or instance spec: " + std::string(arg));
}

BenchRecord run_instance(const InstanceSource& source, const SolverOptions& solver,
                         const BenchOptions& options) {
  return options.isolate ? run_isolated(source, solver, options)
                         : run_in_process(source, solver, options);
}

std::vector<double> slowdown_factors(std::span<const double> times) {
  if (times.size() < 2) throw std::invalid_argument("slowdown needs at least two solvers");
  const double best = *std::min_element(times.begin(), times.end());
  if (!(best > 0.0)) throw std::invalid_argument("slowdown needs positive run-times");
  std::vector<double> out;
  out.reserve(times.size());
  for (const double t : times) out.push_back(t / best);
  return out;
}

SlowdownRow make_slowdown_row(std::string instance, std::int64_t n, std::int64_t m,
                              std::vector<std::string> solvers, std::vector<double> times) {
  if (solvers.size() != times.size()) throw std::invalid_argument("one time per solver");
  SlowdownRow row;
  row.instance = std::move(instance);
  row.n = n;
  row.m = m;
  row.slowdowns = slowdown_factors(times);
  row.solvers = std::move(solvers);
  row.times = std::move(times);
  return row;
}

std::vector<SlowdownRow> slowdown_table(const std::vector<BenchRecord>& records) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<const BenchRecord*>> groups;
  for (const BenchRecord& r : records) {
    auto& g = groups[r.instance];
    if (g.empty()) order.push_back(r.instance);
    g.push_back(&r);
  }
  std::vector<SlowdownRow> rows;
  for (const std::string& name : order) {
    const auto& g = groups[name];
    if (g.size() < 2) throw std::invalid_argument("instance " + name + " has fewer than two solvers");
    std::map<Algorithm, int> seen;
    for (const BenchRecord* r : g) ++seen[r->algo];
    std::vector<std::string> solvers;
    std::vector<double> times;
    for (const BenchRecord* r : g) {
      if (r->report.cut_value != g.front()->report.cut_value) {
        throw VerificationFailure("solvers disagree on the cut value of " + name + ": " +
                                  std::to_string(g.front()->report.cut_value) + " vs " +
                                  std::to_string(r->report.cut_value));
      }
      std::string label = to_string(r->algo);
      if (seen[r->algo] > 1) label += "/" + r->variant;
      solvers.push_back(std::move(label));
      times.push_back(r->report.timing.min_cut_total());
    }
    SlowdownRow row = make_slowdown_row(name, g.front()->n, g.front()->m, std::move(solvers), std::move(times));
    row.cut_value = g.front()->report.cut_value;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<PartitionSummary> summary_averages(const std::vector<SlowdownRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("no instances to summarize");
  const std::vector<std::string>& solvers = rows.front().solvers;
  const std::size_t k = solvers.size();
  std::vector<PartitionSummary> parts(k);
  for (std::size_t i = 0; i < k; ++i) {
    parts[i].fastest = solvers[i];
    parts[i].solvers = solvers;
    parts[i].mean_time.assign(k, 0.0);
    parts[i].mean_slowdown.assign(k, 0.0);
  }
  for (const SlowdownRow& row : rows) {
    if (row.solvers != solvers) throw std::invalid_argument("rows have different solver columns");
    const std::size_t best = static_cast<std::size_t>(
        std::min_element(row.times.begin(), row.times.end()) - row.times.begin());
    PartitionSummary& p = parts[best];
    ++p.instances;
    for (std::size_t i = 0; i < k; ++i) {
      p.mean_time[i] += row.times[i];
      p.mean_slowdown[i] += row.slowdowns[i];
    }
  }
  std::vector<PartitionSummary> out;
  for (PartitionSummary& p : parts) {
    if (p.instances == 0) continue;
    for (std::size_t i = 0; i < k; ++i) {
      p.mean_time[i] /= static_cast<double>(p.instances);
      p.mean_slowdown[i] /= static_cast<double>(p.instances);
    }
    out.push_back(std::move(p));
  }
  return out;
}

void write_records_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
  out << "instance,n,m,algo,variant,t_init,t_minCut,t_maxFlow,cut_value,peak_mem_bytes,"
         "pushes,relabels,global_relabels,gap_relabels,mergers,augmentations,orphans,retreats,"
         "cutoffs,flow_value,mem_source,repetitions\n";
  for (const BenchRecord& r : records) {
    const SolveReport& s = r.report;
    const OperationCounters& k = s.counters;
    out << r.instance << ',' << r.n << ',' << r.m << ',' << to_string(r.algo) << ',' << r.variant
        << ',' << format("%.9f", s.timing.t_init) << ',' << format("%.9f", s.timing.t_min_cut) << ','
        << format("%.9f", s.timing.t_max_flow) << ',' << s.cut_value << ',';
    if (s.peak_memory_bytes) out << *s.peak_memory_bytes;
    out << ',' << k.pushes << ',' << k.relabels << ',' << k.global_relabels << ',' << k.gap_relabels
        << ',' << k.mergers << ',' << k.augmentations << ',' << k.orphans << ',' << k.retreats << ','
        << k.cutoffs << ',';
    if (s.flow_value) out << *s.flow_value;
    out << ',' << to_string(s.memory_source) << ',' << s.timing.repetitions << '\n';
  }
}

void write_records_table(const std::vector<BenchRecord>& records, std::ostream& out) {
  std::vector<std::vector<std::string>> rows;
  for (const BenchRecord& r : records) {
    const SolveReport& s = r.report;
    rows.push_back({r.instance, std::to_string(r.n), std::to_string(r.m), to_string(r.algo), r.variant,
                    format("%.4f", s.timing.t_init), format("%.4f", s.timing.t_min_cut),
                    format("%.4f", s.timing.t_max_flow), std::to_string(s.cut_value),
                    s.flow_value ? std::to_string(*s.flow_value) : "-",
                    s.peak_memory_bytes ? format("%.2f", *s.peak_memory_bytes / 1048576.0) : "n/a"});
  }
  print_aligned({"instance", "n", "m", "algo", "variant", "t_init", "t_minCut", "t_maxFlow", "cut",
                 "flow", "mem[MB]"},
                rows, out);
}

void write_slowdown_csv(const std::vector<SlowdownRow>& rows, std::ostream& out) {
  if (rows.empty()) return;
  out << "instance,nodes,arcs";
  for (const auto& s : rows.front().solvers) out << ",time_" << s;
  for (const auto& s : rows.front().solvers) out << ",slowdown_" << s;
  out << '\n';
  for (const SlowdownRow& row : rows) {
    out << row.instance << ',' << row.n << ',' << row.m;
    for (const double t : row.times) out << ',' << format("%.9f", t);
    for (const double f : row.slowdowns) out << ',' << format("%.4f", f);
    out << '\n';
  }
}

void write_slowdown_table(const std::vector<SlowdownRow>& rows, std::ostream& out) {
  if (rows.empty()) return;
  std::vector<std::string> header{"instance", "nodes", "arcs"};
  for (const auto& s : rows.front().solvers) header.push_back("t_" + s);
  for (const auto& s : rows.front().solvers) header.push_back("slow_" + s);
  std::vector<std::vector<std::string>> cells;
  for (const SlowdownRow& row : rows) {
    std::vector<std::string> line{row.instance, std::to_string(row.n), std::to_string(row.m)};
    for (const double t : row.times) line.push_back(format("%.4f", t));
    for (const double f : row.slowdowns) line.push_back(format("%.2f", f));
    cells.push_back(std::move(line));
  }
  print_aligned(header, cells, out);
}

void write_summary_table(const std::vector<PartitionSummary>& parts, std::ostream& out) {
  if (parts.empty()) return;
  std::vector<std::string> header{""};
  for (const auto& s : parts.front().solvers) header.push_back(s);
  std::vector<std::vector<std::string>> cells;
  for (const PartitionSummary& p : parts) {
    cells.push_back({p.fastest + " fastest (" + std::to_string(p.instances) + ")"});
    std::vector<std::string> time_line{"  mean time"};
    std::vector<std::string> slow_line{"  mean slowdown"};
    for (const double t : p.mean_time) time_line.push_back(format("%.4f", t));
    for (const double f : p.mean_slowdown) slow_line.push_back(format("%.2f", f));
    cells.back().resize(header.size());
    cells.push_back(std::move(time_line));
    cells.push_back(std::move(slow_line));
  }
  print_aligned(header, cells, out);
}

}  // namespace mincut
