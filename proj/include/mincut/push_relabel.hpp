#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mincut/network.hpp"
#include "mincut/report.hpp"

namespace mincut {

// Push-relabel, FIFO-within-highest-label selection, with gap and global
// relabeling. Phase 1 computes a maximum preflow and a minimum cut; phase 2
// (recover_flow) converts the preflow into a maximum flow.
//
// Labels live in [0, 2n]; nodes at label >= n are not processed in phase 1.
// The network must outlive the solver.
class PushRelabel {
 public:
  // A global relabel runs once the relabels since the previous one exceed
  // kGlobalRelabelFactor * n.
  static constexpr std::uint64_t kGlobalRelabelFactor = 2;

  explicit PushRelabel(const FlowNetwork& net);

  // Labels all nodes 0 except s (n) and saturates every arc out of s.
  // Does not run the initial global relabel.
  void initialize();

  // Selects the highest-label active node and discharges it. The first call
  // initializes (if needed) and runs a global relabel. Returns false once no
  // active node with label < n remains.
  bool step();

  // Runs phase 1 to completion. Source set = nodes with label >= n.
  CutSolution min_cut();

  // Exact residual BFS distances to t; nodes that cannot reach t get
  // n + distance to s, nodes reaching neither get 2n.
  void global_relabel();

  // Lifts every node with g < label < n to n. Requires that no node is left
  // at label g.
  void gap_relabel(std::int32_t g);

  // Moves v to `label`, keeping the bucket structures consistent.
  void assign_label(NodeId v, std::int32_t label);

  FlowState preflow() const;
  // Phase 2 on the current preflow.
  FlowState recover_flow() const;

  bool labels_valid() const;
  bool finished() const { return finished_; }

  std::span<const std::int32_t> labels() const { return label_; }
  std::span<const Capacity> excesses() const { return excess_; }
  std::span<const Capacity> residuals() const { return residual_; }
  std::int32_t label_population(std::int32_t label) const { return level_count_[label]; }
  const OperationCounters& counters() const { return counters_; }

 private:
  void rebuild_buckets();
  void activate(NodeId v);
  void level_insert(NodeId v);
  void level_erase(NodeId v);
  void discharge(NodeId u);
  void relabel(NodeId u);
  void push(ArcId a, Capacity delta);

  const FlowNetwork& net_;
  NodeId n_;
  std::vector<Capacity> residual_;
  std::vector<Capacity> excess_;
  std::vector<std::int32_t> label_;
  std::vector<ArcId> current_;
  // Active nodes per label, FIFO.
  std::vector<NodeId> active_head_, active_tail_, active_next_;
  // All non-terminal nodes per label below n, for gap relabeling.
  std::vector<NodeId> level_head_, level_next_, level_prev_;
  std::vector<std::int32_t> level_count_;
  std::int32_t max_active_ = -1;
  std::int32_t max_level_ = 0;
  std::uint64_t relabels_since_global_ = 0;
  bool initialized_ = false;
  bool started_ = false;
  bool finished_ = false;
  OperationCounters counters_;
};

struct PrfResult {
  CutSolution cut;
  FlowState preflow;
  OperationCounters counters;
};

PrfResult prf_min_cut(const FlowNetwork& net);

// Converts a maximum preflow into a feasible maximum flow by cancelling flow
// cycles and returning excess towards s. Throws InputError if `preflow` is
// not a preflow.
FlowState prf_recover_flow(const FlowNetwork& net, const FlowState& preflow);

}  // namespace mincut
