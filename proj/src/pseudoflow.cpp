#include "mincut/pseudoflow.hpp"

#include <algorithm>
#include <stdexcept>

#include "mincut/flow_recovery.hpp"

namespace mincut {

Pseudoflow::Pseudoflow(const FlowNetwork& net, HpfVariant variant)
    : net_(net),
      variant_(variant),
      n_(net.node_count()),
      residual_(net.capacities().begin(), net.capacities().end()),
      excess_(n_, 0),
      label_(n_, 0),
      parent_(n_, kNoNode),
      parent_arc_(n_, kNoArc),
      first_child_(n_, kNoNode),
      next_sibling_(n_, kNoNode),
      prev_sibling_(n_, kNoNode),
      next_scan_(n_, kNoNode),
      cursor_(n_, 0),
      bucket_head_(static_cast<std::size_t>(n_) + 1, kNoNode),
      bucket_next_(n_, kNoNode),
      label_count_(static_cast<std::size_t>(n_) + 1, 0) {}

void Pseudoflow::simple_init() {
  const NodeId s = net_.source();
  const NodeId t = net_.sink();
  std::copy(net_.capacities().begin(), net_.capacities().end(), residual_.begin());
  std::fill(excess_.begin(), excess_.end(), 0);
  std::fill(label_.begin(), label_.end(), 0);
  std::fill(parent_.begin(), parent_.end(), kNoNode);
  std::fill(parent_arc_.begin(), parent_arc_.end(), kNoArc);
  std::fill(first_child_.begin(), first_child_.end(), kNoNode);
  std::fill(bucket_head_.begin(), bucket_head_.end(), kNoNode);
  std::fill(label_count_.begin(), label_count_.end(), 0);
  for (NodeId v = 0; v < n_; ++v) cursor_[v] = net_.first_arc(v);

  for (ArcId a = net_.first_arc(s); a < net_.last_arc(s); ++a) {
    const Capacity c = residual_[a];
    residual_[a] = 0;
    residual_[net_.reverse(a)] += c;
    excess_[net_.head(a)] += c;
    excess_[s] -= c;
  }
  for (ArcId b = net_.first_arc(t); b < net_.last_arc(t); ++b) {
    const ArcId a = net_.reverse(b);
    const Capacity c = residual_[a];
    residual_[a] = 0;
    residual_[b] += c;
    excess_[net_.tail(a)] -= c;
    excess_[t] += c;
  }
  label_[s] = n_;
  label_count_[0] = n_ - 2;
  highest_ = 0;
  lowest_ = n_;
  for (NodeId v = 0; v < n_; ++v) {
    if (!net_.is_terminal(v) && excess_[v] > 0) bucket_push(v);
  }
  initialized_ = true;
}

void Pseudoflow::bucket_push(NodeId r) {
  const std::int32_t l = label_[r];
  bucket_next_[r] = bucket_head_[l];
  bucket_head_[l] = r;
  highest_ = std::max(highest_, l);
  lowest_ = std::min(lowest_, l);
}

NodeId Pseudoflow::bucket_pop() {
  std::int32_t l;
  if (variant_ == HpfVariant::kHighestLabel) {
    while (highest_ >= 0 && bucket_head_[highest_] == kNoNode) --highest_;
    if (highest_ < 0) {
      highest_ = 0;
      return kNoNode;
    }
    l = highest_;
  } else {
    while (lowest_ < n_ && bucket_head_[lowest_] == kNoNode) ++lowest_;
    if (lowest_ >= n_) return kNoNode;
    l = lowest_;
  }
  const NodeId r = bucket_head_[l];
  bucket_head_[l] = bucket_next_[r];
  bucket_next_[r] = kNoNode;
  return r;
}

void Pseudoflow::attach(NodeId child, NodeId parent, ArcId arc) {
  parent_[child] = parent;
  parent_arc_[child] = arc;
  prev_sibling_[child] = kNoNode;
  next_sibling_[child] = first_child_[parent];
  if (first_child_[parent] != kNoNode) prev_sibling_[first_child_[parent]] = child;
  first_child_[parent] = child;
}

void Pseudoflow::detach(NodeId child) {
  const NodeId p = parent_[child];
  if (prev_sibling_[child] != kNoNode) {
    next_sibling_[prev_sibling_[child]] = next_sibling_[child];
  } else {
    first_child_[p] = next_sibling_[child];
  }
  if (next_sibling_[child] != kNoNode) prev_sibling_[next_sibling_[child]] = prev_sibling_[child];
  parent_[child] = kNoNode;
  parent_arc_[child] = kNoArc;
  next_sibling_[child] = kNoNode;
  prev_sibling_[child] = kNoNode;
}

void Pseudoflow::set_label(NodeId v, std::int32_t label) {
  --label_count_[label_[v]];
  label_[v] = label;
  ++label_count_[label];
}

NodeId Pseudoflow::root(NodeId v) const {
  while (parent_[v] != kNoNode) v = parent_[v];
  return v;
}

ArcId Pseudoflow::find_admissible(NodeId w) {
  const std::int32_t target = label_[w] - 1;
  const ArcId end = net_.last_arc(w);
  if (target < 0) {
    cursor_[w] = end;
    return kNoArc;
  }
  for (ArcId a = cursor_[w]; a < end; ++a) {
    const NodeId v = net_.head(a);
    if (residual_[a] > 0 && label_[v] == target && !net_.is_terminal(v)) {
      cursor_[w] = a;
      return a;
    }
  }
  cursor_[w] = end;
  return kNoArc;
}

void Pseudoflow::merger(ArcId a) {
  const NodeId w = net_.tail(a);
  const NodeId v = net_.head(a);
  const NodeId r = root(w);
  if (root(v) == r || label_[w] != label_[v] + 1 || residual_[a] <= 0) {
    throw std::logic_error("merger needs an admissible arc between components");
  }
  // Re-root w's tree at w and hang it below v.
  NodeId cur = w;
  NodeId new_parent = v;
  ArcId new_arc = a;
  while (cur != kNoNode) {
    const NodeId old_parent = parent_[cur];
    const ArcId old_arc = parent_arc_[cur];
    if (old_parent != kNoNode) detach(cur);
    attach(cur, new_parent, new_arc);
    new_parent = cur;
    new_arc = old_arc == kNoArc ? kNoArc : net_.reverse(old_arc);
    cur = old_parent;
  }
  ++counters_.mergers;

  // Push the old root's excess up to the new root, splitting on short arcs.
  NodeId u = r;
  Capacity before = 0;
  while (parent_[u] != kNoNode && excess_[u] > 0) {
    const NodeId p = parent_[u];
    const ArcId arc = parent_arc_[u];
    const Capacity delta = std::min(excess_[u], residual_[arc]);
    if (delta > 0) {
      residual_[arc] -= delta;
      residual_[net_.reverse(arc)] += delta;
      ++counters_.pushes;
    }
    before = excess_[p];
    excess_[p] += delta;
    excess_[u] -= delta;
    if (excess_[u] > 0) {
      detach(u);
      if (label_[u] < n_) bucket_push(u);
    }
    u = p;
  }
  if (parent_[u] == kNoNode && excess_[u] > 0 && before <= 0 && label_[u] < n_) {
    bucket_push(u);
  }
}

void Pseudoflow::lift_component(NodeId r) {
  std::vector<NodeId> stack{r};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    set_label(v, n_);
    for (NodeId c = first_child_[v]; c != kNoNode; c = next_sibling_[c]) stack.push_back(c);
  }
}

void Pseudoflow::process_root(NodeId r) {
  next_scan_[r] = first_child_[r];
  NodeId w = r;
  while (true) {
    const ArcId a = find_admissible(w);
    if (a != kNoArc) {
      merger(a);
      return;
    }
    NodeId y = next_scan_[w];
    while (y != kNoNode && label_[y] != label_[w]) y = next_sibling_[y];
    if (y != kNoNode) {
      next_scan_[w] = next_sibling_[y];
      next_scan_[y] = first_child_[y];
      w = y;
      continue;
    }
    next_scan_[w] = kNoNode;
    set_label(w, label_[w] + 1);
    cursor_[w] = net_.first_arc(w);
    ++counters_.relabels;
    if (w == r) {
      if (label_[r] < n_) bucket_push(r);
      return;
    }
    w = parent_[w];
  }
}

bool Pseudoflow::step() {
  if (!initialized_) simple_init();
  const NodeId r = bucket_pop();
  if (r == kNoNode) return false;
  const std::int32_t l = label_[r];
  if (l > 0 && label_count_[l - 1] == 0) {
    // Nothing left one level below: the component cannot reach a deficit.
    lift_component(r);
    ++counters_.gap_relabels;
    return true;
  }
  process_root(r);
  return true;
}

CutSolution Pseudoflow::min_cut() {
  while (step()) {
  }
  std::vector<bool> in_source(n_);
  for (NodeId v = 0; v < n_; ++v) in_source[v] = label_[v] >= n_;
  in_source[net_.source()] = true;
  in_source[net_.sink()] = false;
  return make_cut(net_, in_source);
}

FlowState Pseudoflow::pseudoflow() const { return flow_from_residuals(net_, residual_); }

bool Pseudoflow::forest_valid() const {
  std::size_t with_parent = 0;
  for (NodeId v = 0; v < n_; ++v) {
    if (net_.is_terminal(v)) {
      if (parent_[v] != kNoNode || first_child_[v] != kNoNode) return false;
      continue;
    }
    NodeId x = v;
    for (NodeId steps = 0; parent_[x] != kNoNode; ++steps) {
      if (steps > n_) return false;  // cycle
      x = parent_[x];
    }
    const NodeId p = parent_[v];
    if (p == kNoNode) continue;
    ++with_parent;
    if (excess_[v] != 0) return false;
    if (label_[p] > label_[v]) return false;
    const ArcId a = parent_arc_[v];
    if (a == kNoArc || net_.tail(a) != v || net_.head(a) != p) return false;
  }
  std::size_t listed = 0;
  for (NodeId v = 0; v < n_; ++v) {
    for (NodeId c = first_child_[v]; c != kNoNode; c = next_sibling_[c]) {
      if (parent_[c] != v) return false;
      if (++listed > with_parent) return false;
    }
  }
  return listed == with_parent;
}

HpfResult hpf_min_cut(const FlowNetwork& net, HpfVariant variant) {
  Pseudoflow solver(net, variant);
  HpfResult r;
  r.cut = solver.min_cut();
  r.pseudoflow = solver.pseudoflow();
  r.counters = solver.counters();
  return r;
}

FlowState hpf_recover_flow(const FlowNetwork& net, const FlowState& pseudoflow) {
  return decompose_to_feasible_flow(net, pseudoflow);
}

}  // namespace mincut
