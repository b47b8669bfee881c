#include "mincut/push_relabel.hpp"

#include <algorithm>

#include "mincut/flow_recovery.hpp"

namespace mincut {

PushRelabel::PushRelabel(const FlowNetwork& net)
    : net_(net),
      n_(net.node_count()),
      residual_(net.capacities().begin(), net.capacities().end()),
      excess_(n_, 0),
      label_(n_, 0),
      current_(n_, 0),
      active_head_(n_, kNoNode),
      active_tail_(n_, kNoNode),
      active_next_(n_, kNoNode),
      level_head_(n_, kNoNode),
      level_next_(n_, kNoNode),
      level_prev_(n_, kNoNode),
      level_count_(n_, 0) {}

void PushRelabel::initialize() {
  std::copy(net_.capacities().begin(), net_.capacities().end(), residual_.begin());
  std::fill(excess_.begin(), excess_.end(), 0);
  std::fill(label_.begin(), label_.end(), 0);
  label_[net_.source()] = n_;
  const NodeId s = net_.source();
  for (ArcId a = net_.first_arc(s); a < net_.last_arc(s); ++a) {
    const Capacity c = residual_[a];
    if (c == 0) continue;
    residual_[a] = 0;
    residual_[net_.reverse(a)] += c;
    excess_[net_.head(a)] += c;
    excess_[s] -= c;
  }
  initialized_ = true;
  rebuild_buckets();
}

void PushRelabel::rebuild_buckets() {
  std::fill(active_head_.begin(), active_head_.end(), kNoNode);
  std::fill(active_tail_.begin(), active_tail_.end(), kNoNode);
  std::fill(level_head_.begin(), level_head_.end(), kNoNode);
  std::fill(level_count_.begin(), level_count_.end(), 0);
  max_active_ = -1;
  max_level_ = 0;
  level_count_[0] = 1;  // t
  for (NodeId v = 0; v < n_; ++v) {
    current_[v] = net_.first_arc(v);
    if (net_.is_terminal(v) || label_[v] >= n_) continue;
    level_insert(v);
    if (excess_[v] > 0) activate(v);
  }
}

void PushRelabel::activate(NodeId v) {
  const std::int32_t l = label_[v];
  active_next_[v] = kNoNode;
  if (active_tail_[l] == kNoNode) {
    active_head_[l] = v;
  } else {
    active_next_[active_tail_[l]] = v;
  }
  active_tail_[l] = v;
  max_active_ = std::max(max_active_, l);
}

void PushRelabel::level_insert(NodeId v) {
  const std::int32_t l = label_[v];
  level_prev_[v] = kNoNode;
  level_next_[v] = level_head_[l];
  if (level_head_[l] != kNoNode) level_prev_[level_head_[l]] = v;
  level_head_[l] = v;
  ++level_count_[l];
  max_level_ = std::max(max_level_, l);
}

void PushRelabel::level_erase(NodeId v) {
  const std::int32_t l = label_[v];
  if (level_prev_[v] != kNoNode) {
    level_next_[level_prev_[v]] = level_next_[v];
  } else {
    level_head_[l] = level_next_[v];
  }
  if (level_next_[v] != kNoNode) level_prev_[level_next_[v]] = level_prev_[v];
  --level_count_[l];
}

void PushRelabel::global_relabel() {
  const NodeId s = net_.source();
  const NodeId t = net_.sink();
  const std::int32_t unreached = 2 * n_;
  std::vector<std::int32_t> dist(n_, -1);
  std::vector<NodeId> queue;
  queue.reserve(n_);

  auto bfs_from = [&](NodeId root, std::int32_t base) {
    queue.clear();
    dist[root] = base;
    queue.push_back(root);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const NodeId v = queue[i];
      for (ArcId b = net_.first_arc(v); b < net_.last_arc(v); ++b) {
        const NodeId w = net_.head(b);
        if (dist[w] >= 0 || w == s || residual_[net_.reverse(b)] <= 0) continue;
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  };
  bfs_from(t, 0);
  bfs_from(s, n_);
  for (NodeId v = 0; v < n_; ++v) {
    label_[v] = dist[v] < 0 ? unreached : std::min(dist[v], unreached);
  }
  label_[s] = n_;
  label_[t] = 0;
  rebuild_buckets();
  relabels_since_global_ = 0;
  ++counters_.global_relabels;
}

void PushRelabel::gap_relabel(std::int32_t g) {
  for (std::int32_t l = g + 1; l <= max_level_ && l < n_; ++l) {
    for (NodeId v = level_head_[l]; v != kNoNode; v = level_next_[v]) label_[v] = n_;
    level_head_[l] = kNoNode;
    level_count_[l] = 0;
    active_head_[l] = kNoNode;
    active_tail_[l] = kNoNode;
  }
  max_level_ = std::min(max_level_, std::max(g - 1, 0));
  max_active_ = std::min(max_active_, g - 1);
  ++counters_.gap_relabels;
}

void PushRelabel::assign_label(NodeId v, std::int32_t label) {
  if (!net_.is_terminal(v) && label_[v] < n_) {
    level_erase(v);
    // Drop v from its active bucket, if present.
    const std::int32_t l = label_[v];
    NodeId prev = kNoNode;
    for (NodeId x = active_head_[l]; x != kNoNode; prev = x, x = active_next_[x]) {
      if (x != v) continue;
      if (prev == kNoNode) active_head_[l] = active_next_[x]; else active_next_[prev] = active_next_[x];
      if (active_tail_[l] == x) active_tail_[l] = prev;
      break;
    }
  }
  label_[v] = label;
  current_[v] = net_.first_arc(v);
  if (!net_.is_terminal(v) && label < n_) {
    level_insert(v);
    if (excess_[v] > 0) activate(v);
  }
}

void PushRelabel::push(ArcId a, Capacity delta) {
  const NodeId v = net_.head(a);
  residual_[a] -= delta;
  residual_[net_.reverse(a)] += delta;
  excess_[net_.tail(a)] -= delta;
  if (excess_[v] == 0 && !net_.is_terminal(v) && label_[v] < n_) {
    excess_[v] = delta;
    activate(v);
  } else {
    excess_[v] += delta;
  }
  ++counters_.pushes;
}

void PushRelabel::relabel(NodeId u) {
  const std::int32_t old = label_[u];
  level_erase(u);
  ++counters_.relabels;
  ++relabels_since_global_;
  if (level_count_[old] == 0) {
    label_[u] = n_;
    gap_relabel(old);
    return;
  }
  std::int32_t next = 2 * n_;
  for (ArcId a = net_.first_arc(u); a < net_.last_arc(u); ++a) {
    if (residual_[a] > 0) next = std::min(next, label_[net_.head(a)] + 1);
  }
  label_[u] = next;
  current_[u] = net_.first_arc(u);
  if (next < n_) level_insert(u);
}

void PushRelabel::discharge(NodeId u) {
  while (excess_[u] > 0) {
    const std::int32_t l = label_[u];
    ArcId a = current_[u];
    const ArcId end = net_.last_arc(u);
    for (; a < end; ++a) {
      if (residual_[a] <= 0 || label_[net_.head(a)] != l - 1) continue;
      push(a, std::min(excess_[u], residual_[a]));
      if (excess_[u] == 0) break;
    }
    current_[u] = a;
    if (excess_[u] == 0) return;
    relabel(u);
    if (label_[u] >= n_) return;
  }
}

bool PushRelabel::step() {
  if (finished_) return false;
  if (!started_) {
    if (!initialized_) initialize();
    global_relabel();
    started_ = true;
  }
  if (relabels_since_global_ > kGlobalRelabelFactor * static_cast<std::uint64_t>(n_)) {
    global_relabel();
  }
  while (max_active_ >= 0 && active_head_[max_active_] == kNoNode) --max_active_;
  if (max_active_ < 0) {
    finished_ = true;
    return false;
  }
  const std::int32_t l = max_active_;
  const NodeId u = active_head_[l];
  active_head_[l] = active_next_[u];
  if (active_head_[l] == kNoNode) active_tail_[l] = kNoNode;
  discharge(u);
  return true;
}

CutSolution PushRelabel::min_cut() {
  while (step()) {
  }
  std::vector<bool> in_source(n_);
  for (NodeId v = 0; v < n_; ++v) in_source[v] = label_[v] >= n_;
  in_source[net_.sink()] = false;
  return make_cut(net_, in_source);
}

FlowState PushRelabel::preflow() const {
  FlowState f = flow_from_residuals(net_, residual_);
  return f;
}

FlowState PushRelabel::recover_flow() const {
  return decompose_to_feasible_flow(net_, preflow());
}

bool PushRelabel::labels_valid() const {
  if (label_[net_.sink()] != 0) return false;
  for (ArcId a = 0; a < net_.arc_count(); ++a) {
    if (residual_[a] > 0 && label_[net_.tail(a)] > label_[net_.head(a)] + 1) return false;
  }
  return true;
}

PrfResult prf_min_cut(const FlowNetwork& net) {
  PushRelabel solver(net);
  PrfResult r;
  r.cut = solver.min_cut();
  r.preflow = solver.preflow();
  r.counters = solver.counters();
  return r;
}

FlowState prf_recover_flow(const FlowNetwork& net, const FlowState& preflow) {
  if (!is_preflow(net, preflow)) {
    throw InputError("phase 2 needs a preflow");
  }
  return decompose_to_feasible_flow(net, preflow);
}

}  // namespace mincut
