#include <doctest.h>

#include "mincut/push_relabel.hpp"
#include "mincut/verify.hpp"
#include "support.hpp"

using namespace mincut;

namespace {

std::vector<Side> sides(int n, std::initializer_list<int> source) {
  std::vector<Side> s(n, Side::kSink);
  for (int v : source) s[v] = Side::kSource;
  return s;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("zero flow is feasible") {
  const FlowNetwork net = fixtures::g2().build();
  const VerificationReport r = check_feasible_flow(net, FlowState::zero(net));
  CHECK(r.feasible);
  CHECK(r.flow_value == 0);
  CHECK(r.violation.empty());
}

TEST_CASE("over-capacity arc is named") {
  const FlowNetwork net = fixtures::g1().build();
  FlowState f = FlowState::zero(net);
  const ArcId a = net.first_arc(0);
  set_arc_flow(net, f, a, 6);
  f.excess = recompute_excesses(net, f);
  const VerificationReport r = check_feasible_flow(net, f);
  CHECK_FALSE(r.feasible);
  CHECK(r.violating_arc == a);
  CHECK_FALSE(r.violation.empty());
}

TEST_CASE("a preflow with stranded excess is not a flow") {
  const FlowNetwork net = fixtures::g3().build();
  const PrfResult prf = prf_min_cut(net);
  const VerificationReport r = check_feasible_flow(net, prf.preflow);
  CHECK_FALSE(r.feasible);
  CHECK(r.violating_node == 1);
  CHECK(r.violating_arc == kNoArc);
}

TEST_CASE("cut capacity of every diamond bipartition") {
  const FlowNetwork net = fixtures::g2().build();
  CHECK(cut_capacity(net, sides(4, {0})) == 3);
  CHECK(cut_capacity(net, sides(4, {0, 1})) == 5);
  CHECK(cut_capacity(net, sides(4, {0, 2})) == 2);
  CHECK(cut_capacity(net, sides(4, {0, 1, 2})) == 3);
}

TEST_CASE("cut capacity rejects bad sides") {
  const FlowNetwork net = fixtures::g2().build();
  CHECK_THROWS_AS(cut_capacity(net, sides(4, {1})), InputError);
  CHECK_THROWS_AS(cut_capacity(net, sides(4, {0, 3})), InputError);
  CHECK_THROWS_AS(cut_capacity(net, sides(3, {0})), InputError);
}

TEST_CASE("brute force on small networks") {
  const BruteForceCut b1 = brute_force_min_cut(fixtures::g1().build());
  CHECK(b1.value == 5);
  CHECK(b1.side == sides(2, {0}));

  const BruteForceCut b2 = brute_force_min_cut(fixtures::g2().build());
  CHECK(b2.value == 2);
  CHECK(b2.side == sides(4, {0, 2}));

  const BruteForceCut b0 = brute_force_min_cut(build_network(2, 0, 1, std::vector<InputArc>{}));
  CHECK(b0.value == 0);
  CHECK(b0.side == sides(2, {0}));
}

TEST_CASE("brute force refuses large networks") {
  const FlowNetwork net = build_network(kBruteForceMaxNodes + 1, 0, 1, std::vector<InputArc>{});
  CHECK_THROWS_AS(brute_force_min_cut(net), std::invalid_argument);
  CHECK_NOTHROW(brute_force_min_cut(build_network(kBruteForceMaxNodes, 0, 1, std::vector<InputArc>{})));
}

TEST_CASE("certify") {
  const FlowNetwork g1 = fixtures::g1().build();
  FlowState f = FlowState::zero(g1);
  set_arc_flow(g1, f, g1.first_arc(0), 5);
  f.excess = recompute_excesses(g1, f);
  const VerificationReport ok = certify(g1, f, make_cut(g1, {true, false}));
  CHECK(ok.certified);
  CHECK(ok.cut_value == 5);

  // Zero flow on the diamond with S = {s}: value 0, cut 3.
  const FlowNetwork g2 = fixtures::g2().build();
  const VerificationReport bad = certify(g2, FlowState::zero(g2), make_cut(g2, {true, false, false, false}));
  CHECK(bad.feasible);
  CHECK_FALSE(bad.certified);
  CHECK(bad.cut_value == 3);
}

TEST_CASE("brute force agrees with the test oracle") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const fixtures::Raw raw = fixtures::random_raw(seed, 12);
    const BruteForceCut b = brute_force_min_cut(raw.build());
    CHECK(b.value == fixtures::brute_min_cut(raw));
    std::vector<bool> in_s(raw.n);
    for (int v = 0; v < raw.n; ++v) in_s[v] = b.side[v] == Side::kSource;
    CHECK(fixtures::cut_value(raw, in_s) == b.value);
  }
}

}  // TEST_SUITE
