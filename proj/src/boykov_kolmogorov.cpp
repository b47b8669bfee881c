#include "mincut/boykov_kolmogorov.hpp"

#include <algorithm>
#include <limits>

namespace mincut {

BoykovKolmogorov::BoykovKolmogorov(const FlowNetwork& net)
    : net_(net),
      n_(net.node_count()),
      residual_(net.capacities().begin(), net.capacities().end()),
      tree_(n_, TreeTag::kFree),
      parent_(n_, kNoArc),
      stamp_(n_, 0),
      dist_(n_, 0),
      queued_(n_, false) {
  tree_[net.source()] = TreeTag::kSource;
  parent_[net.source()] = kTerminal;
  tree_[net.sink()] = TreeTag::kSink;
  parent_[net.sink()] = kTerminal;
  activate(net.source());
  activate(net.sink());
}

void BoykovKolmogorov::activate(NodeId v) {
  if (queued_[v]) return;
  queued_[v] = true;
  active_.push_back(v);
}

NodeId BoykovKolmogorov::next_active() {
  while (!active_.empty()) {
    const NodeId v = active_.front();
    active_.pop_front();
    queued_[v] = false;
    if (tree_[v] != TreeTag::kFree) return v;
  }
  return kNoNode;
}

void BoykovKolmogorov::set_tree(NodeId v, TreeTag tag, ArcId parent_arc) {
  tree_[v] = tag;
  parent_[v] = tag == TreeTag::kFree ? kNoArc : parent_arc;
}

void BoykovKolmogorov::mark_orphan(NodeId v) { orphan(v); }

void BoykovKolmogorov::orphan(NodeId v) {
  parent_[v] = kOrphan;
  orphans_.push_back(v);
  ++counters_.orphans;
}

ArcId BoykovKolmogorov::grow(NodeId i) {
  const bool source_side = tree_[i] == TreeTag::kSource;
  for (ArcId a = net_.first_arc(i); a < net_.last_arc(i); ++a) {
    const ArcId ra = net_.reverse(a);
    // Residual capacity in the direction the tree grows.
    if ((source_side ? residual_[a] : residual_[ra]) <= 0) continue;
    const NodeId j = net_.head(a);
    if (tree_[j] == TreeTag::kFree) {
      tree_[j] = tree_[i];
      parent_[j] = ra;
      stamp_[j] = stamp_[i];
      dist_[j] = dist_[i] + 1;
      activate(j);
    } else if (tree_[j] != tree_[i]) {
      return source_side ? a : ra;
    } else if (parent_[j] >= 0 && stamp_[j] <= stamp_[i] && dist_[j] > dist_[i]) {
      // Shorter route to the terminal through i.
      parent_[j] = ra;
      stamp_[j] = stamp_[i];
      dist_[j] = dist_[i] + 1;
    }
  }
  return kNoArc;
}

void BoykovKolmogorov::augment(ArcId meeting) {
  const NodeId x = net_.tail(meeting);
  const NodeId y = net_.head(meeting);
  Capacity delta = residual_[meeting];
  for (NodeId u = x; parent_[u] != kTerminal; u = net_.head(parent_[u])) {
    delta = std::min(delta, residual_[net_.reverse(parent_[u])]);
  }
  for (NodeId u = y; parent_[u] != kTerminal; u = net_.head(parent_[u])) {
    delta = std::min(delta, residual_[parent_[u]]);
  }
  residual_[meeting] -= delta;
  residual_[net_.reverse(meeting)] += delta;
  for (NodeId u = x; parent_[u] != kTerminal;) {
    const ArcId a = parent_[u];
    const NodeId p = net_.head(a);
    residual_[net_.reverse(a)] -= delta;
    residual_[a] += delta;
    if (residual_[net_.reverse(a)] == 0) orphan(u);
    u = p;
  }
  for (NodeId u = y; parent_[u] != kTerminal;) {
    const ArcId a = parent_[u];
    const NodeId p = net_.head(a);
    residual_[a] -= delta;
    residual_[net_.reverse(a)] += delta;
    if (residual_[a] == 0) orphan(u);
    u = p;
  }
  flow_value_ += delta;
  ++counters_.augmentations;
}

std::int64_t BoykovKolmogorov::origin_distance(NodeId v) {
  std::int64_t d = 0;
  NodeId x = v;
  while (true) {
    if (stamp_[x] == time_) {
      d += dist_[x];
      break;
    }
    const ArcId a = parent_[x];
    if (a == kTerminal) {
      stamp_[x] = time_;
      dist_[x] = 0;
      break;
    }
    if (a < 0) return -1;  // orphan on the chain
    ++d;
    x = net_.head(a);
  }
  const std::int64_t result = d;
  for (x = v; stamp_[x] != time_; x = net_.head(parent_[x])) {
    stamp_[x] = time_;
    dist_[x] = d--;
  }
  return result;
}

void BoykovKolmogorov::adopt(NodeId i) {
  const TreeTag tag = tree_[i];
  const bool source_side = tag == TreeTag::kSource;
  auto into_tree = [&](ArcId a0) {
    // Residual capacity of the candidate tree arc between i and head(a0).
    return source_side ? residual_[net_.reverse(a0)] : residual_[a0];
  };

  ArcId best = kNoArc;
  std::int64_t best_dist = std::numeric_limits<std::int64_t>::max();
  for (ArcId a0 = net_.first_arc(i); a0 < net_.last_arc(i); ++a0) {
    const NodeId j = net_.head(a0);
    if (tree_[j] != tag || into_tree(a0) <= 0) continue;
    const std::int64_t d = origin_distance(j);
    if (d >= 0 && d < best_dist) {
      best_dist = d;
      best = a0;
    }
  }
  if (best != kNoArc) {
    parent_[i] = best;
    stamp_[i] = time_;
    dist_[i] = best_dist + 1;
    return;
  }

  for (ArcId a0 = net_.first_arc(i); a0 < net_.last_arc(i); ++a0) {
    const NodeId j = net_.head(a0);
    if (tree_[j] != tag) continue;
    if (into_tree(a0) > 0) activate(j);
    if (parent_[j] >= 0 && net_.head(parent_[j]) == i) orphan(j);
  }
  tree_[i] = TreeTag::kFree;
  parent_[i] = kNoArc;
}

void BoykovKolmogorov::adopt_all() {
  while (!orphans_.empty()) {
    const NodeId v = orphans_.front();
    orphans_.pop_front();
    adopt(v);
  }
}

bool BoykovKolmogorov::step() {
  NodeId i = current_;
  current_ = kNoNode;
  if (i != kNoNode) {
    queued_[i] = false;
    if (tree_[i] == TreeTag::kFree) i = kNoNode;
  }
  if (i == kNoNode) i = next_active();
  if (i == kNoNode) return false;

  const ArcId meeting = grow(i);
  ++time_;
  if (meeting != kNoArc) {
    // i keeps its active flag while augmenting; scanning resumes from it.
    queued_[i] = true;
    current_ = i;
    augment(meeting);
    adopt_all();
  }
  return true;
}

CutSolution BoykovKolmogorov::min_cut() {
  while (step()) {
  }
  std::vector<bool> in_source(n_);
  for (NodeId v = 0; v < n_; ++v) in_source[v] = tree_[v] == TreeTag::kSource;
  return make_cut(net_, in_source);
}

FlowState BoykovKolmogorov::flow() const { return flow_from_residuals(net_, residual_); }

bool BoykovKolmogorov::trees_valid() const {
  for (NodeId v = 0; v < n_; ++v) {
    const TreeTag tag = tree_[v];
    if (tag == TreeTag::kFree) {
      if (parent_[v] != kNoArc) return false;
      continue;
    }
    if (v == net_.source() || v == net_.sink()) {
      const TreeTag want = v == net_.source() ? TreeTag::kSource : TreeTag::kSink;
      if (tag != want || parent_[v] != kTerminal) return false;
      continue;
    }
    NodeId x = v;
    for (NodeId steps = 0; parent_[x] != kTerminal; ++steps) {
      const ArcId a = parent_[x];
      if (a < 0 || steps > n_) return false;
      const NodeId p = net_.head(a);
      if (net_.tail(a) != x || tree_[p] != tag) return false;
      const Capacity r = tag == TreeTag::kSource ? residual_[net_.reverse(a)] : residual_[a];
      if (r <= 0) return false;
      x = p;
    }
    if (x != (tag == TreeTag::kSource ? net_.source() : net_.sink())) return false;
  }
  return true;
}

BkResult bk_solve(const FlowNetwork& net) {
  BoykovKolmogorov solver(net);
  BkResult r;
  r.cut = solver.min_cut();
  r.flow = solver.flow();
  r.counters = solver.counters();
  return r;
}

}  // namespace mincut
