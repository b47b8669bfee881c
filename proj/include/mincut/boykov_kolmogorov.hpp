#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include "mincut/network.hpp"
#include "mincut/report.hpp"

namespace mincut {

enum class TreeTag : std::uint8_t { kFree, kSource, kSink };

// Boykov-Kolmogorov augmenting paths with two search trees grown from s and
// t. The solver maintains a feasible flow throughout.
//
// parent_arc(v) is the arc from v to its tree parent. In the source tree the
// reverse of that arc (parent -> v) is non-saturated; in the sink tree the arc
// itself (v -> parent) is. s and t are the tree roots (kTerminal).
class BoykovKolmogorov {
 public:
  static constexpr ArcId kTerminal = -2;
  static constexpr ArcId kOrphan = -3;

  explicit BoykovKolmogorov(const FlowNetwork& net);

  // Growth, then augmentation and adoption if the trees met. Returns false
  // when no active node is left.
  bool step();

  // Runs to termination. Source set = final source tree; free nodes go to
  // the sink side.
  CutSolution min_cut();

  // Re-attaches an orphan to a same-tree neighbour whose parent chain reaches
  // the tree's terminal through non-saturated arcs, preferring the one
  // closest to the terminal. Otherwise the orphan becomes free, its children
  // become orphans and same-tree neighbours with residual arcs into it are
  // reactivated.
  void adopt(NodeId orphan);

  // Drains the orphan queue in FIFO order.
  void adopt_all();

  // Test and tooling access: put a node into a tree by hand.
  void set_tree(NodeId v, TreeTag tag, ArcId parent_arc);
  void mark_orphan(NodeId v);

  FlowState flow() const;

  // Trees are disjoint, parent chains are acyclic and end at their
  // terminal, and every tree arc is non-saturated in the tree's direction.
  bool trees_valid() const;

  TreeTag tree(NodeId v) const { return tree_[v]; }
  ArcId parent_arc(NodeId v) const { return parent_[v]; }
  std::span<const Capacity> residuals() const { return residual_; }
  std::span<Capacity> mutable_residuals() { return residual_; }
  const std::deque<NodeId>& orphan_queue() const { return orphans_; }
  bool is_active(NodeId v) const { return queued_[v]; }
  Capacity flow_value() const { return flow_value_; }
  const OperationCounters& counters() const { return counters_; }

 private:
  void activate(NodeId v);
  NodeId next_active();
  ArcId grow(NodeId i);
  void augment(ArcId meeting);
  void orphan(NodeId v);
  // Distance from v to its terminal, or -1 if the chain hits an orphan.
  std::int64_t origin_distance(NodeId v);

  const FlowNetwork& net_;
  NodeId n_;
  std::vector<Capacity> residual_;
  std::vector<TreeTag> tree_;
  std::vector<ArcId> parent_;
  std::vector<std::uint64_t> stamp_;
  std::vector<std::int64_t> dist_;
  std::vector<bool> queued_;
  std::deque<NodeId> active_;
  std::deque<NodeId> orphans_;
  NodeId current_ = kNoNode;
  std::uint64_t time_ = 1;  // stamps start at 0, so nothing is fresh yet
  Capacity flow_value_ = 0;
  OperationCounters counters_;
};

struct BkResult {
  CutSolution cut;
  FlowState flow;
  OperationCounters counters;
};

BkResult bk_solve(const FlowNetwork& net);

}  // namespace mincut
