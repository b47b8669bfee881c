#include "mincut/partial_augment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mincut {

std::int64_t PartialAugment::default_k(const FlowNetwork& net) {
  const auto m = static_cast<std::int64_t>(net.arc_count());
  auto k = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
  while (k * k < m) ++k;
  while (k > 1 && (k - 1) * (k - 1) >= m) --k;
  return std::max<std::int64_t>(k, 1);
}

PartialAugment::PartialAugment(const FlowNetwork& net) : PartialAugment(net, default_k(net)) {}

PartialAugment::PartialAugment(const FlowNetwork& net, std::int64_t k)
    : net_(net),
      n_(net.node_count()),
      k_(k),
      residual_(net.capacities().begin(), net.capacities().end()),
      label_(n_, 0),
      level_count_(2 * static_cast<std::size_t>(n_) + 1, 0),
      current_(n_, 0) {
  if (k < 1) throw std::invalid_argument("path bound k must be at least 1");
  level_count_[0] = n_;
  for (NodeId v = 0; v < n_; ++v) current_[v] = net.first_arc(v);
  reset_path();
}

void PartialAugment::set_label(NodeId v, std::int32_t label) {
  --level_count_[label_[v]];
  label_[v] = label;
  ++level_count_[label];
}

void PartialAugment::reset_path() {
  path_nodes_.assign(1, net_.source());
  path_arcs_.clear();
  segment_start_ = 0;
}

void PartialAugment::global_relabel() {
  const NodeId s = net_.source();
  const NodeId t = net_.sink();
  const std::int32_t unreached = 2 * n_;
  std::vector<std::int32_t> dist(n_, -1);
  std::vector<NodeId> queue;
  queue.reserve(n_);

  auto bfs_from = [&](NodeId root, std::int32_t base) {
    if (dist[root] >= 0) return;
    queue.clear();
    dist[root] = base;
    queue.push_back(root);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const NodeId v = queue[i];
      for (ArcId b = net_.first_arc(v); b < net_.last_arc(v); ++b) {
        const NodeId w = net_.head(b);
        if (dist[w] >= 0 || residual_[net_.reverse(b)] <= 0) continue;
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  };
  bfs_from(t, 0);
  bfs_from(s, n_);
  for (NodeId v = 0; v < n_; ++v) {
    set_label(v, dist[v] < 0 ? unreached : std::min(dist[v], unreached));
    current_[v] = net_.first_arc(v);
  }
  relabels_since_global_ = 0;
  started_ = true;
  ++counters_.global_relabels;
  reset_path();
}

void PartialAugment::gap_relabel(std::int32_t g) {
  for (NodeId v = 0; v < n_; ++v) {
    if (label_[v] > g && label_[v] < n_) {
      set_label(v, n_);
      current_[v] = net_.first_arc(v);
    }
  }
  ++counters_.gap_relabels;
  reset_path();
}

void PartialAugment::relabel(NodeId v) {
  const std::int32_t old = label_[v];
  std::int32_t next = 2 * n_;
  for (ArcId a = net_.first_arc(v); a < net_.last_arc(v); ++a) {
    if (residual_[a] > 0) next = std::min(next, label_[net_.head(a)] + 1);
  }
  set_label(v, next);
  current_[v] = net_.first_arc(v);
  ++counters_.relabels;
  ++relabels_since_global_;
  if (old < n_ && level_count_[old] == 0) {
    gap_relabel(old);
    return;
  }
  if (v != net_.source()) {
    path_nodes_.pop_back();
    path_arcs_.pop_back();
    segment_start_ = std::min(segment_start_, path_arcs_.size());
    ++counters_.retreats;
  }
  if (relabels_since_global_ > kGlobalRelabelFactor * static_cast<std::uint64_t>(n_)) {
    global_relabel();
  }
}

void PartialAugment::augment() {
  Capacity delta = residual_[path_arcs_.front()];
  for (const ArcId a : path_arcs_) delta = std::min(delta, residual_[a]);
  std::size_t first_saturated = path_arcs_.size();
  for (std::size_t i = 0; i < path_arcs_.size(); ++i) {
    const ArcId a = path_arcs_[i];
    residual_[a] -= delta;
    residual_[net_.reverse(a)] += delta;
    if (residual_[a] == 0 && first_saturated == path_arcs_.size()) first_saturated = i;
  }
  flow_value_ += delta;
  ++counters_.augmentations;
  path_arcs_.resize(first_saturated);
  path_nodes_.resize(first_saturated + 1);
  segment_start_ = std::min(segment_start_, path_arcs_.size());
}

bool PartialAugment::step() {
  if (!started_) {
    started_ = true;
    global_relabel();
    return true;
  }
  if (label_[net_.source()] >= n_) return false;

  const NodeId v = path_nodes_.back();
  if (v == net_.sink()) {
    augment();
    return true;
  }
  if (static_cast<std::int64_t>(path_arcs_.size() - segment_start_) >= k_) {
    ++counters_.cutoffs;
    segment_start_ = path_arcs_.size();
    return true;
  }
  const std::int32_t want = label_[v] - 1;
  const ArcId end = net_.last_arc(v);
  for (ArcId a = current_[v]; a < end; ++a) {
    if (residual_[a] > 0 && label_[net_.head(a)] == want) {
      current_[v] = a;
      path_arcs_.push_back(a);
      path_nodes_.push_back(net_.head(a));
      return true;
    }
  }
  current_[v] = end;
  relabel(v);
  return true;
}

CutSolution PartialAugment::min_cut() {
  while (step()) {
  }
  return make_cut(net_, residual_reachable_from_source(net_, residual_));
}

FlowState PartialAugment::flow() const { return flow_from_residuals(net_, residual_); }

bool PartialAugment::labels_valid() const {
  if (label_[net_.sink()] != 0) return false;
  for (ArcId a = 0; a < net_.arc_count(); ++a) {
    if (residual_[a] > 0 && label_[net_.tail(a)] > label_[net_.head(a)] + 1) return false;
  }
  return true;
}

bool PartialAugment::path_valid() const {
  if (path_nodes_.empty() || path_nodes_.front() != net_.source()) return false;
  if (path_arcs_.size() + 1 != path_nodes_.size()) return false;
  for (std::size_t i = 0; i < path_arcs_.size(); ++i) {
    const ArcId a = path_arcs_[i];
    if (net_.tail(a) != path_nodes_[i] || net_.head(a) != path_nodes_[i + 1]) return false;
    if (residual_[a] <= 0) return false;
  }
  return segment_start_ <= path_arcs_.size() &&
         static_cast<std::int64_t>(path_arcs_.size() - segment_start_) <= k_;
}

ParResult par_solve(const FlowNetwork& net) { return par_solve(net, PartialAugment::default_k(net)); }

ParResult par_solve(const FlowNetwork& net, std::int64_t k) {
  PartialAugment solver(net, k);
  ParResult r;
  r.cut = solver.min_cut();
  r.flow = solver.flow();
  r.counters = solver.counters();
  return r;
}

}  // namespace mincut
