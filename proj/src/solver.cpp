#include "mincut/solver.hpp"

#include <stdexcept>

#include "mincut/boykov_kolmogorov.hpp"
#include "mincut/partial_augment.hpp"
#include "mincut/push_relabel.hpp"

namespace mincut {

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "prf") return Algorithm::kPrf;
  if (name == "hpf") return Algorithm::kHpf;
  if (name == "bk") return Algorithm::kBk;
  if (name == "par") return Algorithm::kPar;
  return std::nullopt;
}

const char* to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::kPrf: return "prf";
    case Algorithm::kHpf: return "hpf";
    case Algorithm::kBk: return "bk";
    case Algorithm::kPar: return "par";
  }
  return "?";
}

std::optional<HpfVariant> parse_hpf_variant(std::string_view name) {
  if (name == "highest") return HpfVariant::kHighestLabel;
  if (name == "lowest") return HpfVariant::kLowestLabel;
  return std::nullopt;
}

const char* to_string(HpfVariant variant) {
  return variant == HpfVariant::kHighestLabel ? "highest" : "lowest";
}

std::string variant_label(const SolverOptions& options, const FlowNetwork& net) {
  switch (options.algo) {
    case Algorithm::kPrf: return "fifo-highest";
    case Algorithm::kHpf: return to_string(options.hpf_variant);
    case Algorithm::kBk: return "fifo";
    case Algorithm::kPar:
      return "k=" + std::to_string(options.k.value_or(PartialAugment::default_k(net)));
  }
  return "";
}

namespace {

class PrfSolver final : public Solver {
 public:
  explicit PrfSolver(const FlowNetwork& net) : impl_(net) { impl_.initialize(); }
  CutSolution min_cut() override { return impl_.min_cut(); }
  FlowState max_flow() override { return impl_.recover_flow(); }
  OperationCounters counters() const override { return impl_.counters(); }

 private:
  PushRelabel impl_;
};

class HpfSolver final : public Solver {
 public:
  HpfSolver(const FlowNetwork& net, HpfVariant variant) : net_(net), impl_(net, variant) {
    impl_.simple_init();
  }
  CutSolution min_cut() override { return impl_.min_cut(); }
  FlowState max_flow() override { return hpf_recover_flow(net_, impl_.pseudoflow()); }
  OperationCounters counters() const override { return impl_.counters(); }

 private:
  const FlowNetwork& net_;
  Pseudoflow impl_;
};

class BkSolver final : public Solver {
 public:
  explicit BkSolver(const FlowNetwork& net) : impl_(net) {}
  CutSolution min_cut() override { return impl_.min_cut(); }
  FlowState max_flow() override { return impl_.flow(); }
  OperationCounters counters() const override { return impl_.counters(); }

 private:
  BoykovKolmogorov impl_;
};

class ParSolver final : public Solver {
 public:
  ParSolver(const FlowNetwork& net, std::int64_t k) : impl_(net, k) {}
  CutSolution min_cut() override { return impl_.min_cut(); }
  FlowState max_flow() override { return impl_.flow(); }
  OperationCounters counters() const override { return impl_.counters(); }

 private:
  PartialAugment impl_;
};

}  // namespace

std::unique_ptr<Solver> make_solver(const FlowNetwork& net, const SolverOptions& options) {
  switch (options.algo) {
    case Algorithm::kPrf: return std::make_unique<PrfSolver>(net);
    case Algorithm::kHpf: return std::make_unique<HpfSolver>(net, options.hpf_variant);
    case Algorithm::kBk: return std::make_unique<BkSolver>(net);
    case Algorithm::kPar:
      return std::make_unique<ParSolver>(net, options.k.value_or(PartialAugment::default_k(net)));
  }
  throw std::invalid_argument("unknown algorithm");
}

SolveResult solve(const FlowNetwork& net, const SolverOptions& options, bool min_cut_only) {
  auto solver = make_solver(net, options);
  SolveResult r;
  r.cut = solver->min_cut();
  if (!min_cut_only) r.flow = solver->max_flow();
  r.counters = solver->counters();
  return r;
}

}  // namespace mincut
