#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mincut/network.hpp"
#include "mincut/report.hpp"

namespace mincut {

enum class HpfVariant : std::uint8_t { kLowestLabel, kHighestLabel };

// Hochbaum's pseudoflow algorithm, min-cut stage.
//
// Non-terminal nodes form a forest. Each node has at most one current arc
// linking it to its parent; the chain of parents ends at the component root,
// which is the only node of the component that may carry non-zero excess.
// A component is active (strong) while its root has positive excess. Arcs
// incident to s and t are saturated at initialization and never touched
// again.
//
// Forest edges are stored child-side: parent_arc(v) is the arc from v to its
// parent, the direction in which excess travels towards the root.
class Pseudoflow {
 public:
  explicit Pseudoflow(const FlowNetwork& net,
                      HpfVariant variant = HpfVariant::kHighestLabel);

  // Saturates source- and sink-adjacent arcs; every node becomes a singleton
  // component with label 0.
  void simple_init();

  // Processes one active component with root label < n: either a merger or a
  // relabel of the component's lowest-label subtree. Returns false when no
  // such component remains.
  bool step();

  // Runs to termination. Source set = s plus nodes with label >= n.
  CutSolution min_cut();

  // Merger along the admissible arc a = (w, v): w's component is re-rooted at
  // w, attached below v, and the old root's excess is pushed towards
  // root(v). Where an arc lacks residual capacity the path splits and the
  // upstream part becomes a new component holding the undelivered excess.
  // Requires a admissible and w, v in different components.
  void merger(ArcId a);

  FlowState pseudoflow() const;

  // Forest acyclicity, excess only at roots, labels non-decreasing from the
  // root downwards, and consistent child lists.
  bool forest_valid() const;

  NodeId root(NodeId v) const;
  NodeId parent(NodeId v) const { return parent_[v]; }
  ArcId parent_arc(NodeId v) const { return parent_arc_[v]; }
  std::span<const std::int32_t> labels() const { return label_; }
  std::span<const Capacity> excesses() const { return excess_; }
  std::span<const Capacity> residuals() const { return residual_; }
  const OperationCounters& counters() const { return counters_; }
  HpfVariant variant() const { return variant_; }

 private:
  void bucket_push(NodeId r);
  NodeId bucket_pop();
  void attach(NodeId child, NodeId parent, ArcId arc);
  void detach(NodeId child);
  void set_label(NodeId v, std::int32_t label);
  ArcId find_admissible(NodeId w);
  void process_root(NodeId r);
  void lift_component(NodeId r);

  const FlowNetwork& net_;
  HpfVariant variant_;
  NodeId n_;
  std::vector<Capacity> residual_;
  std::vector<Capacity> excess_;
  std::vector<std::int32_t> label_;
  std::vector<NodeId> parent_;
  std::vector<ArcId> parent_arc_;
  std::vector<NodeId> first_child_, next_sibling_, prev_sibling_;
  std::vector<NodeId> next_scan_;
  std::vector<ArcId> cursor_;
  // Active roots per label, stack order.
  std::vector<NodeId> bucket_head_;
  std::vector<NodeId> bucket_next_;
  std::vector<std::int32_t> label_count_;
  std::int32_t highest_ = 0;
  std::int32_t lowest_ = 0;
  bool initialized_ = false;
  OperationCounters counters_;
};

struct HpfResult {
  CutSolution cut;
  FlowState pseudoflow;
  OperationCounters counters;
};

HpfResult hpf_min_cut(const FlowNetwork& net,
                      HpfVariant variant = HpfVariant::kHighestLabel);

// Converts a terminal pseudoflow into a feasible maximum flow by flow
// decomposition: flow cycles are cancelled, excesses are returned to s and
// deficits to t along the remaining acyclic flow. Throws InputError if the
// pseudoflow violates a capacity.
FlowState hpf_recover_flow(const FlowNetwork& net, const FlowState& pseudoflow);

}  // namespace mincut
