#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mincut {

using NodeId = std::int32_t;
using ArcId = std::int32_t;
using Capacity = std::int64_t;

inline constexpr NodeId kNoNode = -1;
inline constexpr ArcId kNoArc = -1;

// Thrown for malformed networks or instance data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputArc {
  NodeId tail = 0;
  NodeId head = 0;
  Capacity capacity = 0;
};

// Immutable s-t network in compressed adjacency form.
//
// Every arc has a reverse partner; the pair shares one net-flow slot in
// FlowState. The "forward" arc of a pair is the direction of the first input
// arc that created the pair. Arcs of a node are contiguous and ordered by the
// first appearance of their pair in the input.
class FlowNetwork {
 public:
  FlowNetwork() = default;

  NodeId node_count() const { return static_cast<NodeId>(first_out_.size()) - 1; }
  ArcId arc_count() const { return static_cast<ArcId>(head_.size()); }
  ArcId pair_count() const { return static_cast<ArcId>(pair_arc_.size()); }
  NodeId source() const { return source_; }
  NodeId sink() const { return sink_; }
  bool is_terminal(NodeId v) const { return v == source_ || v == sink_; }

  ArcId first_arc(NodeId v) const { return first_out_[v]; }
  ArcId last_arc(NodeId v) const { return first_out_[v + 1]; }
  std::int32_t degree(NodeId v) const { return first_out_[v + 1] - first_out_[v]; }

  NodeId head(ArcId a) const { return head_[a]; }
  NodeId tail(ArcId a) const { return tail_[a]; }
  Capacity capacity(ArcId a) const { return capacity_[a]; }
  ArcId reverse(ArcId a) const { return reverse_[a]; }

  ArcId pair_of(ArcId a) const { return arc_pair_[a]; }
  ArcId forward_arc(ArcId pair) const { return pair_arc_[pair]; }
  bool is_forward(ArcId a) const { return pair_arc_[arc_pair_[a]] == a; }

  // Original arcs as given to build_network, and the arc each one maps to
  // (kNoArc for dropped self-loops / terminal back-arcs).
  std::span<const InputArc> input_arcs() const { return input_arcs_; }
  ArcId input_arc_target(std::size_t i) const { return input_target_[i]; }

  std::span<const ArcId> arc_offsets() const { return first_out_; }
  std::span<const NodeId> heads() const { return head_; }
  std::span<const Capacity> capacities() const { return capacity_; }

  friend FlowNetwork build_network(NodeId n, NodeId s, NodeId t,
                                   std::span<const InputArc> arcs);

 private:
  NodeId source_ = 0;
  NodeId sink_ = 1;
  std::vector<ArcId> first_out_{0};
  std::vector<NodeId> head_;
  std::vector<NodeId> tail_;
  std::vector<Capacity> capacity_;
  std::vector<ArcId> reverse_;
  std::vector<ArcId> arc_pair_;
  std::vector<ArcId> pair_arc_;
  std::vector<InputArc> input_arcs_;
  std::vector<ArcId> input_target_;
};

// Builds a network. Parallel arcs are merged (capacities summed), arcs that
// cannot carry s-t flow (self-loops, arcs into s, arcs out of t) are dropped.
// Throws InputError on s == t, out-of-range ids, negative capacity or
// capacity overflow.
FlowNetwork build_network(NodeId n, NodeId s, NodeId t,
                          std::span<const InputArc> arcs);

inline FlowNetwork build_network(NodeId n, NodeId s, NodeId t,
                                 const std::vector<InputArc>& arcs) {
  return build_network(n, s, t, std::span<const InputArc>(arcs));
}

// Flow, preflow or pseudoflow on a network. One signed net-flow value per arc
// pair, measured along the pair's forward arc.
struct FlowState {
  std::vector<Capacity> pair_flow;
  std::vector<Capacity> excess;

  static FlowState zero(const FlowNetwork& net);

  friend bool operator==(const FlowState&, const FlowState&) = default;
};

inline Capacity arc_flow(const FlowNetwork& net, const FlowState& flow, ArcId a) {
  const Capacity f = flow.pair_flow[net.pair_of(a)];
  return net.is_forward(a) ? f : -f;
}

inline Capacity residual_capacity(const FlowNetwork& net, const FlowState& flow,
                                  ArcId a) {
  return net.capacity(a) - arc_flow(net, flow, a);
}

// Sets the flow on arc a (its partner implicitly gets -f).
inline void set_arc_flow(const FlowNetwork& net, FlowState& flow, ArcId a, Capacity f) {
  flow.pair_flow[net.pair_of(a)] = net.is_forward(a) ? f : -f;
}

// Builds a FlowState from per-arc residual capacities, as kept by solvers.
FlowState flow_from_residuals(const FlowNetwork& net, std::span<const Capacity> residual);

std::vector<Capacity> recompute_excesses(const FlowNetwork& net, const FlowState& flow);

bool is_capacity_feasible(const FlowNetwork& net, const FlowState& flow);
bool is_flow(const FlowNetwork& net, const FlowState& flow);
bool is_preflow(const FlowNetwork& net, const FlowState& flow);
bool is_pseudoflow(const FlowNetwork& net, const FlowState& flow);

// Net flow into the sink.
Capacity flow_value(const FlowNetwork& net, const FlowState& flow);

enum class Side : std::uint8_t { kSource, kSink };

struct CutSolution {
  std::vector<Side> side;
  Capacity value = 0;

  bool in_source_set(NodeId v) const { return side[v] == Side::kSource; }
  std::vector<NodeId> source_set() const;
};

// Cut whose source set is exactly the nodes with in_source[v] true. The value
// is summed over arcs leaving the source set.
CutSolution make_cut(const FlowNetwork& net, const std::vector<bool>& in_source);

// Nodes reachable from s through arcs with positive residual capacity.
std::vector<bool> residual_reachable_from_source(const FlowNetwork& net,
                                                 std::span<const Capacity> residual);

}  // namespace mincut
