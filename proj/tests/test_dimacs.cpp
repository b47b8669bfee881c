#include <doctest.h>

#include <sstream>

#include "mincut/dimacs.hpp"
#include "mincut/pseudoflow.hpp"
#include "mincut/push_relabel.hpp"
#include "support.hpp"

using namespace mincut;

namespace {

ProblemInstance parse(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in, "test");
}

std::string cut_text(const CutSolution& cut) {
  std::ostringstream out;
  write_cut_solution(cut, out);
  return out.str();
}

std::string flow_text(const FlowNetwork& net, const FlowState& flow) {
  std::ostringstream out;
  write_flow_solution(net, flow, out);
  return out.str();
}

std::string normalized(const FlowNetwork& net) {
  std::ostringstream out;
  write_dimacs(net, out);
  return out.str();
}

const char* const kG1 = "p max 2 1\nn 1 s\nn 2 t\na 1 2 5\n";

}  // namespace

TEST_SUITE("dimacs-io") {

TEST_CASE("parse two-node instance") {
  const ProblemInstance p = parse(kG1);
  CHECK(p.name == "test");
  CHECK(p.network.node_count() == 2);
  CHECK(p.network.source() == 0);
  CHECK(p.network.sink() == 1);
  CHECK(p.network.pair_count() == 1);
  CHECK(p.network.capacity(p.network.forward_arc(0)) == 5);
}

TEST_CASE("comments are ignored") {
  const ProblemInstance a = parse(kG1);
  const ProblemInstance b = parse(std::string("c first\nc second line\n") + kG1 + "c trailing\n");
  CHECK(normalized(a.network) == normalized(b.network));
}

TEST_CASE("duplicate arcs merge after counting") {
  const ProblemInstance p = parse("p max 2 2\nn 1 s\nn 2 t\na 1 2 5\na 1 2 3\n");
  CHECK(p.network.pair_count() == 1);
  CHECK(p.network.capacity(p.network.forward_arc(0)) == 8);
}

TEST_CASE("CRLF and mixed blanks") {
  const ProblemInstance p = parse("p  max\t2 1\r\nn 1\ts\r\n  n 2 t\r\na 1   2 5\r\n");
  CHECK(p.network.capacity(p.network.forward_arc(0)) == 5);
}

TEST_CASE("malformed input is rejected") {
  const char* const bad[] = {
      "n 1 s\nn 2 t\na 1 2 5\n",                          // no problem line
      "p max 2 1\np max 2 1\nn 1 s\nn 2 t\na 1 2 5\n",    // duplicate problem line
      "p max 2 1\nn 2 t\na 1 2 5\n",                      // no source
      "p max 2 1\nn 1 s\na 1 2 5\n",                      // no sink
      "p max 2 1\nn 1 s\nn 1 s\nn 2 t\na 1 2 5\n",        // duplicate source
      "p max 2 1\nn 1 s\nn 2 t\nn 2 t\na 1 2 5\n",        // duplicate sink
      "p max 2 1\nn 1 s\nn 2 t\na 0 2 5\n",               // id below range
      "p max 2 1\nn 1 s\nn 2 t\na 1 3 5\n",               // id above range
      "p max 2 1\nn 3 s\nn 2 t\na 1 2 5\n",               // designation out of range
      "p max 2 1\nn 1 s\nn 2 t\na 1 2 -5\n",              // negative capacity
      "p max 2 1\nn 1 s\nn 2 t\na 1 2 5x\n",              // non-integer token
      "p max 2 1\nn 1 s\nn 2 t\na 1 2 2.5\n",             // non-integer token
      "p max x 1\nn 1 s\nn 2 t\na 1 2 5\n",               // non-integer token
      "p max 2 2\nn 1 s\nn 2 t\na 1 2 5\n",               // fewer arcs than declared
      "p max 2 0\nn 1 s\nn 2 t\na 1 2 5\n",               // more arcs than declared
      "p max 2 1\nn 1 s\nn 1 t\na 1 2 5\n",               // s equals t
      "p min 2 1\nn 1 s\nn 2 t\na 1 2 5\n",               // wrong problem type
      "p max 2 1\nn 1 s\nn 2 t\nx 1 2 5\n",               // unknown line
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse(text), DimacsError);
  }
}

TEST_CASE("errors carry the line number") {
  try {
    parse("c header\np max 2 1\nn 1 s\nn 2 t\na 1 2 -5\n");
    FAIL("no exception");
  } catch (const DimacsError& e) {
    CHECK(e.line() == 5);
  }
}

TEST_CASE("cut solution output") {
  const FlowNetwork g1 = fixtures::g1().build();
  CHECK(cut_text(prf_min_cut(g1).cut) == "f 5\ns 1\n");

  const FlowNetwork empty = build_network(2, 0, 1, std::vector<InputArc>{});
  CHECK(cut_text(hpf_min_cut(empty).cut) == "f 0\ns 1\n");

  const fixtures::Raw g2 = fixtures::g2();
  const std::string text = cut_text(hpf_min_cut(g2.build()).cut);
  CHECK(text.substr(0, text.find('\n')) == "f " + std::to_string(fixtures::brute_min_cut(g2)));
}

TEST_CASE("flow solution output") {
  const FlowNetwork g1 = fixtures::g1().build();
  FlowState f = FlowState::zero(g1);
  f.pair_flow[0] = 5;
  CHECK(flow_text(g1, f) == "f 5\nf 1 2 5\n");

  const FlowNetwork empty = build_network(2, 0, 1, {{0, 1, 0}});
  CHECK(flow_text(empty, FlowState::zero(empty)) == "f 0\n");

  // Three input arcs all carry flow in the maximum flow of this instance.
  const FlowNetwork g3 = fixtures::g3().build();
  const FlowState g3_flow = prf_recover_flow(g3, prf_min_cut(g3).preflow);
  CHECK(flow_text(g3, g3_flow) == "f 3\nf 1 2 2\nf 1 3 1\nf 2 3 2\n");
}

TEST_CASE("merged arcs split their flow in input order") {
  const FlowNetwork net = build_network(3, 0, 2, {{0, 1, 4}, {1, 2, 6}, {0, 1, 3}});
  const FlowState flow = prf_recover_flow(net, prf_min_cut(net).preflow);
  CHECK(flow_text(net, flow) == "f 6\nf 1 2 4\nf 2 3 6\nf 1 2 2\n");
}

TEST_CASE("infeasible flows are not written") {
  const FlowNetwork g3 = fixtures::g3().build();
  std::ostringstream out;
  CHECK_THROWS_AS(write_flow_solution(g3, prf_min_cut(g3).preflow, out), InputError);
}

TEST_CASE("normalized round trip is a fixpoint") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const FlowNetwork net = fixtures::random_raw(seed).build();
    const std::string once = normalized(net);
    const std::string twice = normalized(parse(once).network);
    CHECK(once == twice);
    const std::string thrice = normalized(parse(twice).network);
    CHECK(twice == thrice);
  }
}

}  // TEST_SUITE
