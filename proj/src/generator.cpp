#include "mincut/generator.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <vector>

namespace mincut {

namespace {

// Portable uniform draw in [0, range); std distributions differ across
// standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t threshold = (0 - range) % range;
  while (true) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % range;
  }
}

Capacity uniform_capacity(std::mt19937_64& rng, Capacity c) {
  return 1 + static_cast<Capacity>(bounded(rng, static_cast<std::uint64_t>(c)));
}

bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

struct Sphere {
  std::int64_t x, y, z, r;
};

void validate(const InstanceSpec& spec) {
  if (spec.width < 1 || spec.height < 1 || spec.depth < 1) throw InputError("grid dimension must be positive");
  if (spec.max_capacity < 1) throw InputError("capacity bound c must be at least 1");
  if (!(spec.noise >= 0.0 && spec.noise <= 1.0)) throw InputError("noise must lie in [0, 1]");
  const std::int32_t nb = spec.neighborhood;
  switch (spec.kind) {
    case GridKind::kGrid2d:
      if (nb != 4 && nb != 8) throw InputError("grid2d neighborhood must be 4 or 8");
      break;
    case GridKind::kGrid3d:
      if (nb != 6 && nb != 26) throw InputError("grid3d neighborhood must be 6 or 26");
      break;
    case GridKind::kStereo:
      if (nb != 2 && nb != 5) throw InputError("stereo neighborhood must be 2 or 5");
      break;
  }
  if (grid_node_count(spec) + 2 > std::int64_t{1} << 30) throw InputError("grid too large");
}

struct Generated {
  NodeId n;
  std::vector<InputArc> arcs;
};

Generated generate_arcs(const InstanceSpec& raw) {
  validate(raw);
  const InstanceSpec spec = effective_dimensions(raw);
  const std::int64_t w = spec.width;
  const std::int64_t h = spec.height;
  const std::int64_t d = spec.kind == GridKind::kGrid2d ? 1 : spec.kind == GridKind::kStereo ? 2 : spec.depth;
  std::mt19937_64 rng(spec.seed);
  const Capacity c = spec.max_capacity;

  // Foreground region: union of a few balls. Stereo layers share the
  // planar region.
  const std::int64_t extent = std::max({w, h, spec.kind == GridKind::kGrid3d ? d : 1});
  std::array<Sphere, 3> spheres{};
  for (Sphere& b : spheres) {
    b.x = static_cast<std::int64_t>(bounded(rng, w));
    b.y = static_cast<std::int64_t>(bounded(rng, h));
    b.z = spec.kind == GridKind::kGrid3d ? static_cast<std::int64_t>(bounded(rng, d)) : 0;
    b.r = 1 + static_cast<std::int64_t>(bounded(rng, std::max<std::int64_t>(extent / 3, 1)));
  }
  auto foreground = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    if (spec.kind != GridKind::kGrid3d) z = 0;
    for (const Sphere& b : spheres) {
      const std::int64_t dx = x - b.x, dy = y - b.y, dz = z - b.z;
      if (dx * dx + dy * dy + dz * dz <= b.r * b.r) return true;
    }
    return false;
  };

  std::vector<std::array<int, 3>> offsets;
  if (spec.kind == GridKind::kGrid2d) {
    offsets = {{1, 0, 0}, {0, 1, 0}};
    if (spec.neighborhood == 8) {
      offsets.push_back({1, 1, 0});
      offsets.push_back({-1, 1, 0});
    }
  } else if (spec.kind == GridKind::kGrid3d) {
    for (int dz = -1; dz <= 1; ++dz) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          const bool positive = dz > 0 || (dz == 0 && (dy > 0 || (dy == 0 && dx > 0)));
          if (!positive) continue;
          if (spec.neighborhood == 6 && std::abs(dx) + std::abs(dy) + std::abs(dz) != 1) continue;
          offsets.push_back({dx, dy, dz});
        }
      }
    }
  } else {
    offsets = {{1, 0, 0}, {0, 1, 0}};
    for (int shift = 0; shift < spec.neighborhood; ++shift) offsets.push_back({shift, 0, 1});
  }

  auto id = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    return static_cast<NodeId>(2 + x + w * (y + h * z));
  };

  Generated g;
  g.n = static_cast<NodeId>(w * h * d + 2);
  for (std::int64_t z = 0; z < d; ++z) {
    for (std::int64_t y = 0; y < h; ++y) {
      for (std::int64_t x = 0; x < w; ++x) {
        const NodeId v = id(x, y, z);
        bool fg = foreground(x, y, z);
        if (coin(rng, spec.noise)) fg = !fg;
        const Capacity tc = uniform_capacity(rng, c);
        if (fg) {
          g.arcs.push_back({0, v, tc});
        } else {
          g.arcs.push_back({v, 1, tc});
        }
        for (const auto& o : offsets) {
          // Cross arcs only leave the first stereo layer.
          if (spec.kind == GridKind::kStereo && o[2] == 1 && z != 0) continue;
          const std::int64_t nx = x + o[0], ny = y + o[1], nz = z + o[2];
          if (nx < 0 || nx >= w || ny < 0 || ny >= h || nz < 0 || nz >= d) continue;
          const NodeId u = id(nx, ny, nz);
          const Capacity ec = uniform_capacity(rng, c);
          g.arcs.push_back({v, u, ec});
          g.arcs.push_back({u, v, ec});
        }
      }
    }
  }
  return g;
}

}  // namespace

InstanceSpec effective_dimensions(const InstanceSpec& spec) {
  InstanceSpec out = spec;
  auto half = [](std::int32_t v) { return std::max(v / 2, 1); };
  if (spec.decimate_x) out.width = half(spec.width);
  if (spec.decimate_y) out.height = half(spec.height);
  if (spec.decimate_z) out.depth = half(spec.depth);
  out.decimate_x = out.decimate_y = out.decimate_z = false;
  return out;
}

std::int64_t grid_node_count(const InstanceSpec& spec) {
  const InstanceSpec e = effective_dimensions(spec);
  const std::int64_t layers = e.kind == GridKind::kGrid2d ? 1 : e.kind == GridKind::kStereo ? 2 : e.depth;
  return std::int64_t{e.width} * e.height * layers;
}

InstanceSpec parse_instance_spec(std::string_view text) {
  const std::vector<std::string_view> parts = split(text, ':');
  if (parts.size() < 2) throw InputError("instance spec needs at least kind and dimensions");
  InstanceSpec spec;
  std::size_t dims_wanted = 2;
  if (parts[0] == "grid2d") {
    spec.kind = GridKind::kGrid2d;
    spec.neighborhood = 4;
  } else if (parts[0] == "grid3d") {
    spec.kind = GridKind::kGrid3d;
    spec.neighborhood = 6;
    dims_wanted = 3;
  } else if (parts[0] == "stereo") {
    spec.kind = GridKind::kStereo;
    spec.neighborhood = 2;
  } else {
    throw InputError("unknown instance kind '" + std::string(parts[0]) + "'");
  }
  const std::vector<std::string_view> dims = split(parts[1], 'x');
  if (dims.size() != dims_wanted) throw InputError("wrong number of dimensions in '" + std::string(parts[1]) + "'");
  spec.width = parse_number<std::int32_t>(dims[0], "dimension");
  spec.height = parse_number<std::int32_t>(dims[1], "dimension");
  if (dims_wanted == 3) spec.depth = parse_number<std::int32_t>(dims[2], "dimension");

  for (std::size_t i = 2; i < parts.size(); ++i) {
    const std::string_view p = parts[i];
    if (p.starts_with("seed=")) {
      spec.seed = parse_number<std::uint64_t>(p.substr(5), "seed");
    } else if (p.starts_with("noise=")) {
      spec.noise = parse_number<double>(p.substr(6), "noise");
    } else if (p.starts_with("decimate=")) {
      for (const char axis : p.substr(9)) {
        if (axis == 'x') spec.decimate_x = true;
        else if (axis == 'y') spec.decimate_y = true;
        else if (axis == 'z') spec.decimate_z = true;
        else throw InputError("decimation axes must be x, y or z");
      }
    } else if (p.starts_with("n")) {
      spec.neighborhood = parse_number<std::int32_t>(p.substr(1), "neighborhood");
    } else if (p.starts_with("c")) {
      spec.max_capacity = parse_number<std::int64_t>(p.substr(1), "capacity bound");
    } else {
      throw InputError("unknown instance spec field '" + std::string(p) + "'");
    }
  }
  validate(spec);
  return spec;
}

std::string to_string(const InstanceSpec& spec) {
  std::ostringstream out;
  switch (spec.kind) {
    case GridKind::kGrid2d: out << "grid2d:" << spec.width << 'x' << spec.height; break;
    case GridKind::kGrid3d: out << "grid3d:" << spec.width << 'x' << spec.height << 'x' << spec.depth; break;
    case GridKind::kStereo: out << "stereo:" << spec.width << 'x' << spec.height; break;
  }
  out << ":n" << spec.neighborhood << ":c" << spec.max_capacity << ":seed=" << spec.seed;
  if (spec.noise != 0.0) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", spec.noise);
    out << ":noise=" << buf;
  }
  if (spec.decimate_x || spec.decimate_y || spec.decimate_z) {
    out << ":decimate=" << (spec.decimate_x ? "x" : "") << (spec.decimate_y ? "y" : "")
        << (spec.decimate_z ? "z" : "");
  }
  return out.str();
}

ProblemInstance generate_instance(const InstanceSpec& spec) {
  Generated g = generate_arcs(spec);
  ProblemInstance instance;
  instance.name = to_string(spec);
  instance.network = build_network(g.n, 0, 1, g.arcs);
  return instance;
}

std::string generate_dimacs(const InstanceSpec& spec) {
  const Generated g = generate_arcs(spec);
  std::string out;
  out.reserve(g.arcs.size() * 20 + 128);
  out += "c " + to_string(spec) + "\n";
  out += "p max " + std::to_string(g.n) + " " + std::to_string(g.arcs.size()) + "\n";
  out += "n 1 s\nn 2 t\n";
  for (const InputArc& a : g.arcs) {
    out += "a ";
    out += std::to_string(a.tail + 1);
    out += ' ';
    out += std::to_string(a.head + 1);
    out += ' ';
    out += std::to_string(a.capacity);
    out += '\n';
  }
  return out;
}

}  // namespace mincut
