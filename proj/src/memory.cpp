#include "mincut/memory.hpp"

#include <sys/resource.h>
#include <unistd.h>

#include <fstream>

namespace mincut {

const char* to_string(MemorySource source) {
  switch (source) {
    case MemorySource::kStatm: return "statm";
    case MemorySource::kRusage: return "rusage";
    case MemorySource::kUnavailable: return "unavailable";
  }
  return "unavailable";
}

std::uint64_t page_size_bytes() {
  const long size = sysconf(_SC_PAGESIZE);
  return size > 0 ? static_cast<std::uint64_t>(size) : 4096;
}

MemorySample sample_resident_memory() {
  MemorySample out;
  std::ifstream statm("/proc/self/statm");
  std::uint64_t total_pages = 0;
  std::uint64_t resident_pages = 0;
  if (statm >> total_pages >> resident_pages) {
    out.bytes = resident_pages * page_size_bytes();
    out.source = MemorySource::kStatm;
    return out;
  }
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) == 0 && usage.ru_maxrss > 0) {
    out.bytes = static_cast<std::uint64_t>(usage.ru_maxrss) * 1024;  // kilobytes on Linux
    out.source = MemorySource::kRusage;
  }
  return out;
}

void PeakMemoryTracker::sample() {
  const MemorySample s = sample_resident_memory();
  if (!s.bytes) return;
  if (!peak_.bytes || *s.bytes > *peak_.bytes) peak_ = s;
}

}  // namespace mincut
