#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "mincut/dimacs.hpp"

namespace mincut {

enum class GridKind : std::uint8_t { kGrid2d, kGrid3d, kStereo };

// Synthetic vision-style instance. Node 1 (0-based 0) is s, node 2 is t, grid
// nodes follow in x-fastest order.
//
// neighborhood: 4 or 8 for grid2d, 6 or 26 for grid3d. For stereo it is the
// number of cross arcs per node (2 or 5) between two 4-connected W x H
// layers.
struct InstanceSpec {
  GridKind kind = GridKind::kGrid2d;
  std::int32_t width = 1;
  std::int32_t height = 1;
  std::int32_t depth = 1;
  std::int32_t neighborhood = 4;
  std::int64_t max_capacity = 10;
  double noise = 0.0;  // fraction of nodes whose terminal side is flipped
  std::uint64_t seed = 1;
  bool decimate_x = false;
  bool decimate_y = false;
  bool decimate_z = false;
};

// Text form: kind:WxH[xD]:n<nbh>:c<cap>[:seed=<s>][:noise=<f>][:decimate=<axes>]
// e.g. "grid3d:64x64x32:n6:c10:seed=1". Throws InputError.
InstanceSpec parse_instance_spec(std::string_view text);
std::string to_string(const InstanceSpec& spec);

// Dimensions after decimation.
InstanceSpec effective_dimensions(const InstanceSpec& spec);

std::int64_t grid_node_count(const InstanceSpec& spec);

// Throws InputError for zero dimensions, c < 1, noise outside [0, 1] or an
// unsupported neighborhood.
ProblemInstance generate_instance(const InstanceSpec& spec);

// DIMACS text of the generated arc list, unmerged, in generation order.
std::string generate_dimacs(const InstanceSpec& spec);

}  // namespace mincut
