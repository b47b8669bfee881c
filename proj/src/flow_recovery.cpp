#include "mincut/flow_recovery.hpp"

#include <algorithm>

namespace mincut {

std::vector<NodeId> cancel_flow_cycles(const FlowNetwork& net, FlowState& flow) {
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  const NodeId n = net.node_count();
  std::vector<std::uint8_t> color(n, kWhite);
  std::vector<ArcId> cursor(net.arc_offsets().begin(), net.arc_offsets().end() - 1);
  std::vector<ArcId> stack_arc(n, kNoArc);  // arc that put the node on the stack
  std::vector<NodeId> stack;
  std::vector<NodeId> finished;
  finished.reserve(n);

  auto positive = [&](ArcId a) {
    return !net.is_terminal(net.head(a)) && arc_flow(net, flow, a) > 0;
  };

  for (NodeId root = 0; root < n; ++root) {
    if (net.is_terminal(root) || color[root] != kWhite) continue;
    color[root] = kGrey;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      bool moved = false;
      for (; cursor[u] < net.last_arc(u); ++cursor[u]) {
        const ArcId a = cursor[u];
        if (!positive(a)) continue;
        const NodeId v = net.head(a);
        if (color[v] == kWhite) {
          color[v] = kGrey;
          stack_arc[v] = a;
          stack.push_back(v);
          moved = true;
          break;
        }
        if (color[v] != kGrey) continue;

        // Cycle v -> ... -> u -> v.
        Capacity delta = arc_flow(net, flow, a);
        for (NodeId x = u; x != v; x = net.tail(stack_arc[x])) {
          delta = std::min(delta, arc_flow(net, flow, stack_arc[x]));
        }
        set_arc_flow(net, flow, a, arc_flow(net, flow, a) - delta);
        NodeId restart = kNoNode;
        for (NodeId x = u; x != v; x = net.tail(stack_arc[x])) {
          const ArcId b = stack_arc[x];
          set_arc_flow(net, flow, b, arc_flow(net, flow, b) - delta);
          if (arc_flow(net, flow, b) == 0) restart = x;
        }
        if (restart != kNoNode) {
          // Unwind above the saturated stack arc closest to v.
          const NodeId keep = net.tail(stack_arc[restart]);
          while (stack.back() != keep) {
            color[stack.back()] = kWhite;
            stack.pop_back();
          }
          moved = true;
          break;
        }
      }
      if (!moved) {
        color[u] = kBlack;
        finished.push_back(u);
        stack.pop_back();
      }
    }
  }
  return finished;
}

FlowState decompose_to_feasible_flow(const FlowNetwork& net, FlowState flow) {
  if (!is_capacity_feasible(net, flow)) {
    throw InputError("flow recovery needs a capacity-feasible pseudoflow");
  }
  const std::vector<NodeId> order = cancel_flow_cycles(net, flow);
  std::vector<Capacity> excess = recompute_excesses(net, flow);

  // Excess goes back along positive inflow; a node's suppliers finish later.
  for (NodeId u : order) {
    for (ArcId b = net.first_arc(u); b < net.last_arc(u) && excess[u] > 0; ++b) {
      const ArcId in = net.reverse(b);
      const Capacity f = arc_flow(net, flow, in);
      if (f <= 0) continue;
      const Capacity delta = std::min(excess[u], f);
      set_arc_flow(net, flow, in, f - delta);
      excess[u] -= delta;
      excess[net.tail(in)] += delta;
    }
  }
  // Deficits go forward along positive outflow, in topological order.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId u = *it;
    for (ArcId b = net.first_arc(u); b < net.last_arc(u) && excess[u] < 0; ++b) {
      const Capacity f = arc_flow(net, flow, b);
      if (f <= 0) continue;
      const Capacity delta = std::min(-excess[u], f);
      set_arc_flow(net, flow, b, f - delta);
      excess[u] += delta;
      excess[net.head(b)] -= delta;
    }
  }
  flow.excess = std::move(excess);
  return flow;
}

}  // namespace mincut
