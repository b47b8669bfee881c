#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "mincut/network.hpp"

namespace mincut {

struct ProblemInstance {
  std::string name;
  FlowNetwork network;
};

// Malformed DIMACS input. line() is 1-based, 0 when the problem is global
// (for example a missing sink designation).
class DimacsError : public InputError {
 public:
  DimacsError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Reads a DIMACS max-flow problem. Node ids on disk are 1-based. The number
// of arc lines must equal the m of the problem line; merging and dropping
// happen afterwards in build_network.
ProblemInstance parse_dimacs(std::istream& in, std::string name = {});
ProblemInstance read_dimacs_file(const std::filesystem::path& path);

// Normalized form: one line per arc pair in its forward direction, plus a
// line for the reverse direction when that carries capacity.
void write_dimacs(const FlowNetwork& net, std::ostream& out);

// "f <value>" followed by "s <id>" for every node of the source set,
// ascending, 1-based.
void write_cut_solution(const CutSolution& cut, std::ostream& out);

// "f <value>" followed by "f <u> <v> <flow>" for every input arc carrying
// positive flow, in input order. Flow on merged arcs is handed out to the
// contributing input arcs greedily in input order. Throws InputError if the
// flow is not feasible.
void write_flow_solution(const FlowNetwork& net, const FlowState& flow, std::ostream& out);

}  // namespace mincut
