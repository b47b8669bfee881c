#include "mincut/network.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mincut {

namespace {

void check_node(NodeId v, NodeId n, const char* what) {
  if (v < 0 || v >= n) {
    throw InputError(std::string(what) + " node id " + std::to_string(v) +
                     " out of range [0, " + std::to_string(n) + ")");
  }
}

Capacity checked_add(Capacity a, Capacity b) {
  Capacity r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw InputError("capacity sum overflows 64-bit range");
  }
  return r;
}

}  // namespace

FlowNetwork build_network(NodeId n, NodeId s, NodeId t,
                          std::span<const InputArc> arcs) {
  if (n < 2) throw InputError("network needs at least two nodes");
  check_node(s, n, "source");
  check_node(t, n, "sink");
  if (s == t) throw InputError("source and sink must differ");

  FlowNetwork net;
  net.source_ = s;
  net.sink_ = t;
  net.input_arcs_.assign(arcs.begin(), arcs.end());
  net.input_target_.assign(arcs.size(), kNoArc);

  // Kept arcs, grouped by unordered endpoint pair. A stable sort on the key
  // keeps input order inside each group, so the first element of a group is
  // the arc that defines the pair's forward direction.
  std::vector<std::size_t> kept;
  kept.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const InputArc& a = arcs[i];
    check_node(a.tail, n, "tail");
    check_node(a.head, n, "head");
    if (a.capacity < 0) {
      throw InputError("negative capacity on arc " + std::to_string(i));
    }
    if (a.tail == a.head || a.head == s || a.tail == t) continue;
    kept.push_back(i);
  }
  auto key = [&](std::size_t i) {
    const auto lo = static_cast<std::uint64_t>(std::min(arcs[i].tail, arcs[i].head));
    const auto hi = static_cast<std::uint64_t>(std::max(arcs[i].tail, arcs[i].head));
    return (lo << 32) | hi;
  };
  std::stable_sort(kept.begin(), kept.end(),
                   [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

  struct Pair {
    std::size_t first_input;
    NodeId tail;
    NodeId head;
    Capacity forward_cap;
    Capacity reverse_cap;
  };
  std::vector<Pair> pairs;
  std::vector<std::size_t> input_pair(arcs.size(), 0);
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const std::size_t i = kept[k];
    if (k == 0 || key(kept[k - 1]) != key(i)) {
      pairs.push_back({i, arcs[i].tail, arcs[i].head, 0, 0});
    }
    Pair& p = pairs.back();
    if (arcs[i].tail == p.tail) {
      p.forward_cap = checked_add(p.forward_cap, arcs[i].capacity);
    } else {
      p.reverse_cap = checked_add(p.reverse_cap, arcs[i].capacity);
    }
    input_pair[i] = pairs.size() - 1;
  }
  // Pair order = first appearance in the input.
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pairs[a].first_input < pairs[b].first_input;
  });
  std::vector<std::size_t> rank(pairs.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  if (pairs.size() * 2 > static_cast<std::size_t>(INT32_MAX)) {
    throw InputError("too many arcs");
  }
  const auto m = static_cast<ArcId>(pairs.size() * 2);
  net.first_out_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Pair& p : pairs) {
    ++net.first_out_[p.tail + 1];
    ++net.first_out_[p.head + 1];
  }
  std::partial_sum(net.first_out_.begin(), net.first_out_.end(), net.first_out_.begin());

  net.head_.resize(m);
  net.tail_.resize(m);
  net.capacity_.resize(m);
  net.reverse_.resize(m);
  net.arc_pair_.resize(m);
  net.pair_arc_.resize(pairs.size());
  std::vector<ArcId> next(net.first_out_.begin(), net.first_out_.end() - 1);
  for (std::size_t r = 0; r < order.size(); ++r) {
    const Pair& p = pairs[order[r]];
    const ArcId fwd = next[p.tail]++;
    const ArcId rev = next[p.head]++;
    net.head_[fwd] = p.head;
    net.tail_[fwd] = p.tail;
    net.capacity_[fwd] = p.forward_cap;
    net.head_[rev] = p.tail;
    net.tail_[rev] = p.head;
    net.capacity_[rev] = p.reverse_cap;
    net.reverse_[fwd] = rev;
    net.reverse_[rev] = fwd;
    net.arc_pair_[fwd] = static_cast<ArcId>(r);
    net.arc_pair_[rev] = static_cast<ArcId>(r);
    net.pair_arc_[r] = fwd;
  }
  for (std::size_t i : kept) {
    const ArcId fwd = net.pair_arc_[rank[input_pair[i]]];
    net.input_target_[i] = arcs[i].tail == net.tail_[fwd] ? fwd : net.reverse_[fwd];
  }
  return net;
}

FlowState FlowState::zero(const FlowNetwork& net) {
  FlowState f;
  f.pair_flow.assign(net.pair_count(), 0);
  f.excess.assign(net.node_count(), 0);
  return f;
}

FlowState flow_from_residuals(const FlowNetwork& net, std::span<const Capacity> residual) {
  FlowState f;
  f.pair_flow.resize(net.pair_count());
  for (ArcId p = 0; p < net.pair_count(); ++p) {
    const ArcId a = net.forward_arc(p);
    f.pair_flow[p] = net.capacity(a) - residual[a];
  }
  f.excess = recompute_excesses(net, f);
  return f;
}

std::vector<Capacity> recompute_excesses(const FlowNetwork& net, const FlowState& flow) {
  std::vector<Capacity> e(net.node_count(), 0);
  for (ArcId p = 0; p < net.pair_count(); ++p) {
    const ArcId a = net.forward_arc(p);
    e[net.head(a)] += flow.pair_flow[p];
    e[net.tail(a)] -= flow.pair_flow[p];
  }
  return e;
}

bool is_capacity_feasible(const FlowNetwork& net, const FlowState& flow) {
  if (flow.pair_flow.size() != static_cast<std::size_t>(net.pair_count())) return false;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (arc_flow(net, flow, a) > net.capacity(a)) return false;
  }
  return true;
}

bool is_pseudoflow(const FlowNetwork& net, const FlowState& flow) {
  return is_capacity_feasible(net, flow);
}

bool is_preflow(const FlowNetwork& net, const FlowState& flow) {
  if (!is_capacity_feasible(net, flow)) return false;
  const auto e = recompute_excesses(net, flow);
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (!net.is_terminal(v) && e[v] < 0) return false;
  }
  return true;
}

bool is_flow(const FlowNetwork& net, const FlowState& flow) {
  if (!is_capacity_feasible(net, flow)) return false;
  const auto e = recompute_excesses(net, flow);
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (!net.is_terminal(v) && e[v] != 0) return false;
  }
  return true;
}

Capacity flow_value(const FlowNetwork& net, const FlowState& flow) {
  Capacity value = 0;
  const NodeId t = net.sink();
  for (ArcId a = net.first_arc(t); a < net.last_arc(t); ++a) {
    value -= arc_flow(net, flow, a);
  }
  return value;
}

std::vector<NodeId> CutSolution::source_set() const {
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < side.size(); ++v) {
    if (side[v] == Side::kSource) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

CutSolution make_cut(const FlowNetwork& net, const std::vector<bool>& in_source) {
  CutSolution cut;
  cut.side.resize(net.node_count());
  for (NodeId v = 0; v < net.node_count(); ++v) {
    cut.side[v] = in_source[v] ? Side::kSource : Side::kSink;
  }
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (in_source[net.tail(a)] && !in_source[net.head(a)]) cut.value += net.capacity(a);
  }
  return cut;
}

std::vector<bool> residual_reachable_from_source(const FlowNetwork& net,
                                                 std::span<const Capacity> residual) {
  std::vector<bool> seen(net.node_count(), false);
  std::vector<NodeId> queue{net.source()};
  seen[net.source()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const NodeId u = queue[i];
    for (ArcId a = net.first_arc(u); a < net.last_arc(u); ++a) {
      const NodeId v = net.head(a);
      if (residual[a] > 0 && !seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace mincut
