#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mincut/network.hpp"

namespace mincut {

// Operation counters. Each solver fills the ones that apply to it.
struct OperationCounters {
  std::uint64_t pushes = 0;
  std::uint64_t relabels = 0;
  std::uint64_t global_relabels = 0;
  std::uint64_t gap_relabels = 0;
  std::uint64_t mergers = 0;
  std::uint64_t augmentations = 0;
  std::uint64_t orphans = 0;
  std::uint64_t retreats = 0;
  std::uint64_t cutoffs = 0;

  friend bool operator==(const OperationCounters&, const OperationCounters&) = default;
};

// Wall-clock seconds per phase, averaged over measured repetitions.
struct TimingBreakdown {
  double t_init = 0.0;
  double t_min_cut = 0.0;
  double t_max_flow = 0.0;
  int repetitions = 0;

  double min_cut_total() const { return t_init + t_min_cut; }
  double max_flow_total() const { return t_init + t_min_cut + t_max_flow; }
};

enum class MemorySource : std::uint8_t { kStatm, kRusage, kUnavailable };

const char* to_string(MemorySource source);

struct SolveReport {
  Capacity cut_value = 0;
  std::optional<Capacity> flow_value;  // empty when flow recovery was skipped
  TimingBreakdown timing;
  std::optional<std::uint64_t> peak_memory_bytes;
  MemorySource memory_source = MemorySource::kUnavailable;
  OperationCounters counters;
};

}  // namespace mincut
