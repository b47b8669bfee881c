#pragma once

#include <cstdint>
#include <optional>

#include "mincut/report.hpp"

namespace mincut {

struct MemorySample {
  std::optional<std::uint64_t> bytes;
  MemorySource source = MemorySource::kUnavailable;
};

// Current resident set from /proc/self/statm (resident pages times page
// size), falling back to the process peak RSS from getrusage.
MemorySample sample_resident_memory();

std::uint64_t page_size_bytes();

// Keeps the largest sample seen. Sample at phase boundaries; solver arrays
// stay resident until the solver is destroyed.
class PeakMemoryTracker {
 public:
  void sample();
  MemorySample peak() const { return peak_; }

 private:
  MemorySample peak_;
};

}  // namespace mincut
