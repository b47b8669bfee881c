#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mincut/network.hpp"
#include "mincut/report.hpp"

namespace mincut {

// Partial augment-relabel. A path from s is extended along admissible arcs
// (d(u) = d(v) + 1, residual > 0). Reaching t augments by the path
// bottleneck and cuts the path back to the tail of the first saturated arc.
// A dead end relabels the tip and retreats.
//
// The solver holds a flow at all times. Each time the path grows by k arcs
// without reaching t, a cutoff is counted and a new segment starts at the
// tip; no flow is pushed along an unfinished path.
class PartialAugment {
 public:
  static constexpr std::uint64_t kGlobalRelabelFactor = 2;

  // Throws std::invalid_argument for k < 1.
  PartialAugment(const FlowNetwork& net, std::int64_t k);
  // k = ceil(sqrt(m)).
  explicit PartialAugment(const FlowNetwork& net);

  static std::int64_t default_k(const FlowNetwork& net);

  // One extend, augment, cutoff or relabel/retreat action. The first call
  // runs a global relabel. Returns false once d(s) >= n.
  bool step();

  // Runs to termination. Source set = nodes reachable from s in the
  // residual graph.
  CutSolution min_cut();

  // Same contract as PushRelabel::global_relabel. Resets the path to [s].
  void global_relabel();
  // Lifts every node with g < d < n to n. Resets the path to [s].
  void gap_relabel(std::int32_t g);

  FlowState flow() const;
  bool labels_valid() const;
  // Path starts at s, consecutive nodes are joined by residual arcs and the
  // current segment is at most k arcs long.
  bool path_valid() const;

  std::int64_t k() const { return k_; }
  std::span<const NodeId> path() const { return path_nodes_; }
  std::span<const std::int32_t> labels() const { return label_; }
  std::span<const Capacity> residuals() const { return residual_; }
  Capacity flow_value() const { return flow_value_; }
  const OperationCounters& counters() const { return counters_; }

 private:
  void set_label(NodeId v, std::int32_t label);
  void reset_path();
  void augment();
  void relabel(NodeId v);

  const FlowNetwork& net_;
  NodeId n_;
  std::int64_t k_;
  std::vector<Capacity> residual_;
  std::vector<std::int32_t> label_;
  std::vector<std::int32_t> level_count_;
  std::vector<ArcId> current_;
  std::vector<NodeId> path_nodes_;
  std::vector<ArcId> path_arcs_;
  std::size_t segment_start_ = 0;
  std::uint64_t relabels_since_global_ = 0;
  Capacity flow_value_ = 0;
  bool started_ = false;
  OperationCounters counters_;
};

struct ParResult {
  CutSolution cut;
  FlowState flow;
  OperationCounters counters;
};

ParResult par_solve(const FlowNetwork& net);
ParResult par_solve(const FlowNetwork& net, std::int64_t k);

}  // namespace mincut
