#include "mincut/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace mincut {

VerificationReport check_feasible_flow(const FlowNetwork& net, const FlowState& flow) {
  VerificationReport r;
  r.feasible = true;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    const Capacity f = arc_flow(net, flow, a);
    if (f > net.capacity(a)) {
      r.feasible = false;
      r.violating_arc = a;
      r.violation = "arc " + std::to_string(net.tail(a) + 1) + "->" + std::to_string(net.head(a) + 1) +
                    " carries " + std::to_string(f) + " over capacity " +
                    std::to_string(net.capacity(a));
      break;
    }
  }
  const std::vector<Capacity> excess = recompute_excesses(net, flow);
  if (r.feasible) {
    for (NodeId v = 0; v < net.node_count(); ++v) {
      if (net.is_terminal(v) || excess[v] == 0) continue;
      r.feasible = false;
      r.violating_node = v;
      r.violation = "node " + std::to_string(v + 1) + " has imbalance " + std::to_string(excess[v]);
      break;
    }
  }
  r.flow_value = excess[net.sink()];
  return r;
}

Capacity cut_capacity(const FlowNetwork& net, const std::vector<Side>& side) {
  if (side.size() != static_cast<std::size_t>(net.node_count())) {
    throw InputError("side assignment has the wrong size");
  }
  if (side[net.source()] != Side::kSource) throw InputError("source is not in S");
  if (side[net.sink()] != Side::kSink) throw InputError("sink is not in T");
  Capacity total = 0;
  for (const InputArc& a : net.input_arcs()) {
    if (side[a.tail] == Side::kSource && side[a.head] == Side::kSink) total += a.capacity;
  }
  return total;
}

Capacity cut_capacity(const FlowNetwork& net, const CutSolution& cut) {
  return cut_capacity(net, cut.side);
}

BruteForceCut brute_force_min_cut(const FlowNetwork& net) {
  const NodeId n = net.node_count();
  if (n > kBruteForceMaxNodes) throw std::invalid_argument("brute force limited to 22 nodes");
  const NodeId s = net.source();
  const NodeId t = net.sink();

  std::vector<NodeId> free_nodes;
  for (NodeId v = 0; v < n; ++v) {
    if (v != s && v != t) free_nodes.push_back(v);
  }
  // Incident input arcs per node: (other end, capacity, outgoing?).
  struct Incidence {
    NodeId other;
    Capacity capacity;
    bool outgoing;
  };
  std::vector<std::vector<Incidence>> incident(n);
  for (const InputArc& a : net.input_arcs()) {
    if (a.tail == a.head) continue;
    incident[a.tail].push_back({a.head, a.capacity, true});
    incident[a.head].push_back({a.tail, a.capacity, false});
  }

  std::vector<bool> in_s(n, false);
  in_s[s] = true;
  Capacity value = 0;
  for (const InputArc& a : net.input_arcs()) {
    if (in_s[a.tail] && !in_s[a.head]) value += a.capacity;
  }

  auto sorted_set = [&](const std::vector<bool>& member) {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < n; ++v) {
      if (member[v]) out.push_back(v);
    }
    return out;
  };

  std::vector<bool> best = in_s;
  Capacity best_value = value;
  std::vector<NodeId> best_sorted = sorted_set(best);

  const std::uint64_t subsets = std::uint64_t{1} << free_nodes.size();
  for (std::uint64_t i = 1; i < subsets; ++i) {
    // Gray code: flip the lowest set bit of i.
    const int bit = __builtin_ctzll(i);
    const NodeId v = free_nodes[bit];
    const bool joining = !in_s[v];
    for (const Incidence& e : incident[v]) {
      const bool other_in_s = in_s[e.other];
      if (e.outgoing && !other_in_s) value += joining ? e.capacity : -e.capacity;
      if (!e.outgoing && other_in_s) value += joining ? -e.capacity : e.capacity;
    }
    in_s[v] = joining;
    if (value < best_value) {
      best_value = value;
      best = in_s;
      best_sorted = sorted_set(best);
    } else if (value == best_value) {
      std::vector<NodeId> candidate = sorted_set(in_s);
      if (candidate < best_sorted) {
        best = in_s;
        best_sorted = std::move(candidate);
      }
    }
  }

  BruteForceCut r;
  r.value = best_value;
  r.side.resize(n);
  for (NodeId v = 0; v < n; ++v) r.side[v] = best[v] ? Side::kSource : Side::kSink;
  return r;
}

VerificationReport certify(const FlowNetwork& net, const FlowState& flow, const CutSolution& cut) {
  VerificationReport r = check_feasible_flow(net, flow);
  const Capacity cut_value = cut_capacity(net, cut);
  r.cut_value = cut_value;
  if (!r.feasible) return r;
  if (r.flow_value != cut_value) {
    r.violation = "flow value " + std::to_string(r.flow_value) + " differs from cut capacity " +
                  std::to_string(cut_value);
    return r;
  }
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (!cut.in_source_set(net.tail(a)) || cut.in_source_set(net.head(a))) continue;
    if (residual_capacity(net, flow, a) > 0) {
      r.violating_arc = a;
      r.violation = "crossing arc " + std::to_string(net.tail(a) + 1) + "->" +
                    std::to_string(net.head(a) + 1) + " has residual capacity";
      return r;
    }
  }
  r.certified = true;
  return r;
}

}  // namespace mincut
