#include <doctest.h>

#include <queue>

#include "mincut/push_relabel.hpp"
#include "mincut/verify.hpp"
#include "support.hpp"

using namespace mincut;

namespace {

// Residual BFS distance to t, -1 where t is unreachable.
std::vector<int> distance_to_sink(const FlowNetwork& net, std::span<const Capacity> residual) {
  std::vector<int> dist(net.node_count(), -1);
  std::queue<NodeId> q;
  dist[net.sink()] = 0;
  q.push(net.sink());
  while (!q.empty()) {
    const NodeId v = q.front();
    q.pop();
    for (ArcId a = 0; a < net.arc_count(); ++a) {
      const NodeId u = net.tail(a);
      if (net.head(a) != v || residual[a] <= 0 || dist[u] >= 0 || u == net.source()) continue;
      dist[u] = dist[v] + 1;
      q.push(u);
    }
  }
  return dist;
}

}  // namespace

TEST_SUITE("algo-prf") {

TEST_CASE("single arc") {
  const PrfResult r = prf_min_cut(fixtures::g1().build());
  CHECK(r.cut.value == 5);
  CHECK(r.cut.source_set() == std::vector<NodeId>{0});
}

TEST_CASE("zero capacities") {
  const fixtures::Raw raw{4, 0, 3, {{0, 1, 0}, {1, 3, 0}, {0, 2, 0}}};
  const FlowNetwork net = raw.build();
  const PrfResult r = prf_min_cut(net);
  CHECK(r.cut.value == 0);
  // no node can reach t, so every node but t is on the source side
  CHECK(r.cut.source_set() == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("diamond") {
  const fixtures::Raw raw = fixtures::g2();
  const FlowNetwork net = raw.build();
  const PrfResult r = prf_min_cut(net);
  CHECK(r.cut.value == fixtures::brute_min_cut(raw));
  CHECK(cut_capacity(net, r.cut) == r.cut.value);
}

TEST_CASE("phase two keeps a flow unchanged") {
  const FlowNetwork net = fixtures::g2().build();
  FlowState f = FlowState::zero(net);
  // one unit along s-a-t
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    const bool on_path = (net.tail(a) == 0 && net.head(a) == 1) || (net.tail(a) == 1 && net.head(a) == 3);
    if (on_path) set_arc_flow(net, f, a, 1);
  }
  f.excess = recompute_excesses(net, f);
  REQUIRE(is_flow(net, f));
  CHECK(prf_recover_flow(net, f) == f);
}

TEST_CASE("phase two returns stranded excess") {
  const FlowNetwork net = fixtures::g3().build();
  const PrfResult r = prf_min_cut(net);
  REQUIRE(r.preflow.excess[1] == 1);
  const FlowState flow = prf_recover_flow(net, r.preflow);
  CHECK(is_flow(net, flow));
  CHECK(flow_value(net, flow) == 3);
}

TEST_CASE("phase two rejects non-preflows") {
  const FlowNetwork net = fixtures::g2().build();
  FlowState f = FlowState::zero(net);
  for (ArcId a = net.first_arc(1); a < net.last_arc(1); ++a) {
    if (net.head(a) == 3) set_arc_flow(net, f, a, 1);  // a -> t without inflow
  }
  f.excess = recompute_excesses(net, f);
  REQUIRE_FALSE(is_preflow(net, f));
  CHECK_THROWS_AS(prf_recover_flow(net, f), InputError);
}

TEST_CASE("phase two on random instances") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const fixtures::Raw raw = fixtures::random_raw(seed, 50, 30);
    const FlowNetwork net = raw.build();
    const PrfResult r = prf_min_cut(net);
    const FlowState flow = prf_recover_flow(net, r.preflow);
    CHECK(check_feasible_flow(net, flow).feasible);
    CHECK(flow_value(net, flow) == r.cut.value);
    CHECK(r.cut.value == fixtures::edmonds_karp(raw));
  }
}

TEST_CASE("initial global relabel gives BFS distances") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const FlowNetwork net = fixtures::random_raw(seed, 20).build();
    PushRelabel prf(net);
    prf.initialize();
    prf.global_relabel();
    const std::vector<int> dist = distance_to_sink(net, prf.residuals());
    for (NodeId v = 0; v < net.node_count(); ++v) {
      if (v == net.source()) continue;
      if (dist[v] >= 0) {
        CHECK(prf.labels()[v] == dist[v]);
      } else {
        CHECK(prf.labels()[v] >= net.node_count());
      }
    }
    CHECK(prf.labels_valid());
    const std::vector<std::int32_t> before(prf.labels().begin(), prf.labels().end());
    prf.global_relabel();
    CHECK(std::vector<std::int32_t>(prf.labels().begin(), prf.labels().end()) == before);
  }
}

TEST_CASE("gap relabel lifts the nodes above the gap") {
  // chain s -> a -> b -> c -> t
  const FlowNetwork net = build_network(5, 0, 4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
  PushRelabel prf(net);
  prf.initialize();
  prf.global_relabel();
  REQUIRE(prf.labels()[3] == 1);
  REQUIRE(prf.labels()[2] == 2);
  REQUIRE(prf.labels()[1] == 3);
  prf.assign_label(3, 5);
  REQUIRE(prf.label_population(1) == 0);
  prf.gap_relabel(1);
  CHECK(prf.labels()[2] == 5);
  CHECK(prf.labels()[1] == 5);
  CHECK(prf.label_population(2) == 0);
  CHECK(prf.label_population(3) == 0);
}

TEST_CASE("gap with nothing above is a no-op") {
  const FlowNetwork net = build_network(4, 0, 3, {{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 3, 1}});
  PushRelabel prf(net);
  prf.initialize();
  prf.global_relabel();
  const std::vector<std::int32_t> before(prf.labels().begin(), prf.labels().end());
  prf.gap_relabel(2);
  CHECK(std::vector<std::int32_t>(prf.labels().begin(), prf.labels().end()) == before);
}

TEST_CASE("label validity at every step") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const fixtures::Raw raw = fixtures::random_raw(seed, 16);
    const FlowNetwork net = raw.build();
    PushRelabel prf(net);
    bool valid = true;
    while (prf.step()) valid = valid && prf.labels_valid();
    CHECK(valid);
    const CutSolution cut = prf.min_cut();
    CHECK(cut.value == fixtures::brute_min_cut(raw));
    CHECK(flow_value(net, prf.preflow()) == cut.value);
    for (NodeId v = 0; v < net.node_count(); ++v) {
      if (net.is_terminal(v) || prf.excesses()[v] <= 0) continue;
      CHECK(prf.labels()[v] >= net.node_count());
    }
  }
}

}  // TEST_SUITE
