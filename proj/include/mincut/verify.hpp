#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mincut/network.hpp"

namespace mincut {

struct VerificationReport {
  bool feasible = false;
  // First violated constraint, if any.
  std::string violation;
  ArcId violating_arc = kNoArc;
  NodeId violating_node = kNoNode;
  Capacity flow_value = 0;
  std::optional<Capacity> cut_value;
  bool certified = false;
};

// Capacity bounds on every arc, then balance at every non-terminal node.
VerificationReport check_feasible_flow(const FlowNetwork& net, const FlowState& flow);

// Sum of capacities of the input arcs leaving the source side. Throws
// InputError unless s is on the source side and t on the sink side.
Capacity cut_capacity(const FlowNetwork& net, const std::vector<Side>& side);
Capacity cut_capacity(const FlowNetwork& net, const CutSolution& cut);

inline constexpr NodeId kBruteForceMaxNodes = 22;

struct BruteForceCut {
  Capacity value = 0;
  std::vector<Side> side;
};

// Enumerates every s-t bipartition. Ties go to the lexicographically
// smallest sorted source set. Throws std::invalid_argument for n > 22.
BruteForceCut brute_force_min_cut(const FlowNetwork& net);

// Feasible flow, flow value equal to the cut capacity, and no residual
// capacity on any arc from S to T.
VerificationReport certify(const FlowNetwork& net, const FlowState& flow, const CutSolution& cut);

}  // namespace mincut
