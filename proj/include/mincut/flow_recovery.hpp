#pragma once

#include "mincut/network.hpp"

namespace mincut {

// Cancels every directed cycle of positive flow among non-terminal nodes and
// returns the non-terminal nodes in DFS finishing order of the remaining
// acyclic flow: a node appears after every node it sends flow to.
std::vector<NodeId> cancel_flow_cycles(const FlowNetwork& net, FlowState& flow);

// Turns a pseudoflow into a feasible flow. Positive excess is returned
// towards s by reducing inflow; deficits are pushed towards t by reducing
// outflow. Flow on arcs between the two sides of a cut that separates
// excess nodes from deficit nodes is left untouched, so a terminal
// pseudoflow/preflow keeps its cut value.
//
// Throws InputError if `flow` is not capacity-feasible.
FlowState decompose_to_feasible_flow(const FlowNetwork& net, FlowState flow);

}  // namespace mincut
