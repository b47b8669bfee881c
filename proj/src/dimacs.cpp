#include "mincut/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>
#include <vector>

#include "mincut/verify.hpp"

namespace mincut {

DimacsError::DimacsError(std::size_t line, const std::string& message)
    : InputError(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::int64_t to_int(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw DimacsError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ProblemInstance parse_dimacs(std::istream& in, std::string name) {
  std::string text;
  std::size_t line_no = 0;
  bool have_problem = false;
  std::int64_t n = 0;
  std::int64_t declared_m = 0;
  NodeId source = kNoNode;
  NodeId sink = kNoNode;
  std::vector<InputArc> arcs;

  auto node_id = [&](std::string_view token) {
    const std::int64_t id = to_int(token, line_no);
    if (id < 1 || id > n) {
      throw DimacsError(line_no, "node id " + std::to_string(id) + " outside [1, " +
                                     std::to_string(n) + "]");
    }
    return static_cast<NodeId>(id - 1);
  };

  while (std::getline(in, text)) {
    ++line_no;
    const std::vector<std::string_view> tok = split(text);
    if (tok.empty() || tok[0] == "c") continue;
    const std::string_view kind = tok[0];
    if (kind == "p") {
      if (have_problem) throw DimacsError(line_no, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "max") {
        throw DimacsError(line_no, "problem line must read 'p max <n> <m>'");
      }
      n = to_int(tok[2], line_no);
      declared_m = to_int(tok[3], line_no);
      if (n < 2 || n > std::numeric_limits<NodeId>::max() - 1) {
        throw DimacsError(line_no, "node count must be at least 2");
      }
      if (declared_m < 0) throw DimacsError(line_no, "negative arc count");
      have_problem = true;
      arcs.reserve(static_cast<std::size_t>(std::min<std::int64_t>(declared_m, 1 << 24)));
    } else if (kind == "n") {
      if (!have_problem) throw DimacsError(line_no, "node line before the problem line");
      if (tok.size() != 3) throw DimacsError(line_no, "node line must read 'n <id> s|t'");
      const NodeId v = node_id(tok[1]);
      if (tok[2] == "s") {
        if (source != kNoNode) throw DimacsError(line_no, "duplicate source designation");
        source = v;
      } else if (tok[2] == "t") {
        if (sink != kNoNode) throw DimacsError(line_no, "duplicate sink designation");
        sink = v;
      } else {
        throw DimacsError(line_no, "node designation must be 's' or 't'");
      }
    } else if (kind == "a") {
      if (!have_problem) throw DimacsError(line_no, "arc line before the problem line");
      if (tok.size() != 4) throw DimacsError(line_no, "arc line must read 'a <u> <v> <cap>'");
      InputArc a;
      a.tail = node_id(tok[1]);
      a.head = node_id(tok[2]);
      a.capacity = to_int(tok[3], line_no);
      if (a.capacity < 0) throw DimacsError(line_no, "negative capacity");
      arcs.push_back(a);
    } else {
      throw DimacsError(line_no, "unknown line type '" + std::string(kind) + "'");
    }
  }

  if (!have_problem) throw DimacsError(0, "missing problem line");
  if (source == kNoNode) throw DimacsError(0, "missing source designation");
  if (sink == kNoNode) throw DimacsError(0, "missing sink designation");
  if (source == sink) throw DimacsError(0, "source and sink are the same node");
  if (static_cast<std::int64_t>(arcs.size()) != declared_m) {
    throw DimacsError(0, "problem line declares " + std::to_string(declared_m) + " arcs, found " +
                             std::to_string(arcs.size()));
  }
  ProblemInstance instance;
  instance.name = std::move(name);
  instance.network = build_network(static_cast<NodeId>(n), source, sink, arcs);
  return instance;
}

ProblemInstance read_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_dimacs(in, path.stem().string());
}

void write_dimacs(const FlowNetwork& net, std::ostream& out) {
  std::int64_t m = 0;
  for (ArcId p = 0; p < net.pair_count(); ++p) {
    m += 1 + (net.capacity(net.reverse(net.forward_arc(p))) > 0 ? 1 : 0);
  }
  out << "p max " << net.node_count() << ' ' << m << '\n';
  out << "n " << net.source() + 1 << " s\n";
  out << "n " << net.sink() + 1 << " t\n";
  for (ArcId p = 0; p < net.pair_count(); ++p) {
    const ArcId a = net.forward_arc(p);
    const ArcId r = net.reverse(a);
    out << "a " << net.tail(a) + 1 << ' ' << net.head(a) + 1 << ' ' << net.capacity(a) << '\n';
    if (net.capacity(r) > 0) {
      out << "a " << net.tail(r) + 1 << ' ' << net.head(r) + 1 << ' ' << net.capacity(r) << '\n';
    }
  }
  if (!out) throw std::ios_base::failure("write failed");
}

void write_cut_solution(const CutSolution& cut, std::ostream& out) {
  out << "f " << cut.value << '\n';
  for (NodeId v = 0; v < static_cast<NodeId>(cut.side.size()); ++v) {
    if (cut.side[v] == Side::kSource) out << "s " << v + 1 << '\n';
  }
  if (!out) throw std::ios_base::failure("write failed");
}

void write_flow_solution(const FlowNetwork& net, const FlowState& flow, std::ostream& out) {
  const VerificationReport check = check_feasible_flow(net, flow);
  if (!check.feasible) throw InputError("flow is not feasible: " + check.violation);
  std::vector<Capacity> remaining(net.arc_count(), 0);
  for (ArcId a = 0; a < net.arc_count(); ++a) remaining[a] = std::max<Capacity>(arc_flow(net, flow, a), 0);

  out << "f " << check.flow_value << '\n';
  const auto inputs = net.input_arcs();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const ArcId a = net.input_arc_target(i);
    if (a == kNoArc) continue;
    const Capacity share = std::min(remaining[a], inputs[i].capacity);
    if (share <= 0) continue;
    remaining[a] -= share;
    out << "f " << inputs[i].tail + 1 << ' ' << inputs[i].head + 1 << ' ' << share << '\n';
  }
  if (!out) throw std::ios_base::failure("write failed");
}

}  // namespace mincut
