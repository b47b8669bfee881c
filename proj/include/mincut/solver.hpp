#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "mincut/network.hpp"
#include "mincut/pseudoflow.hpp"
#include "mincut/report.hpp"

namespace mincut {

enum class Algorithm : std::uint8_t { kPrf, kHpf, kBk, kPar };

std::optional<Algorithm> parse_algorithm(std::string_view name);
const char* to_string(Algorithm algo);

std::optional<HpfVariant> parse_hpf_variant(std::string_view name);
const char* to_string(HpfVariant variant);

struct SolverOptions {
  Algorithm algo = Algorithm::kHpf;
  HpfVariant hpf_variant = HpfVariant::kHighestLabel;
  std::optional<std::int64_t> k;  // PAR path bound; default ceil(sqrt(m))
};

// Variant column of reports: "fifo-highest", "highest", "lowest", "fifo",
// "k=<k>".
std::string variant_label(const SolverOptions& options, const FlowNetwork& net);

// One solver run split into the three timed phases. Construction allocates
// and initializes solver state; min_cut() runs the cut phase; max_flow()
// recovers a feasible maximum flow and must follow min_cut().
class Solver {
 public:
  virtual ~Solver() = default;
  virtual CutSolution min_cut() = 0;
  virtual FlowState max_flow() = 0;
  virtual OperationCounters counters() const = 0;
};

std::unique_ptr<Solver> make_solver(const FlowNetwork& net, const SolverOptions& options);

struct SolveResult {
  CutSolution cut;
  std::optional<FlowState> flow;
  OperationCounters counters;
};

// Untimed convenience wrapper over make_solver.
SolveResult solve(const FlowNetwork& net, const SolverOptions& options, bool min_cut_only = false);

}  // namespace mincut
