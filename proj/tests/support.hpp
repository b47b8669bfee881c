#pragma once

// Fixtures and oracles shared by the unit tests and the acceptance binary.
// The oracles work on raw arc lists and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "mincut/network.hpp"

namespace fixtures {

struct Raw {
  int n = 0;
  int s = 0;
  int t = 1;
  std::vector<mincut::InputArc> arcs;

  mincut::FlowNetwork build() const { return mincut::build_network(n, s, t, arcs); }
};

// s -> t, capacity 5.
inline Raw g1() { return {2, 0, 1, {{0, 1, 5}}}; }

// Diamond: s=0, a=1, b=2, t=3.
inline Raw g2() { return {4, 0, 3, {{0, 1, 1}, {0, 2, 2}, {1, 3, 2}, {2, 3, 1}, {1, 2, 1}}}; }

// s=0, a=1, t=2, node 3 isolated.
inline Raw g3() { return {4, 0, 2, {{0, 1, 3}, {0, 2, 1}, {1, 2, 2}}}; }

// s=0, t=1 and a, b: two long paths crossed by a unit arc in both
// directions, the textbook bad case for arbitrary augmenting paths.
inline Raw zigzag(std::int64_t c) {
  return {4, 0, 1, {{0, 2, c}, {0, 3, c}, {2, 1, c}, {3, 1, c}, {2, 3, 1}, {3, 2, 1}}};
}

class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi]; the tiny modulo bias is irrelevant here.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

// Random instance with 2..max_n nodes, random terminals, capacities in
// [0, max_cap]. Includes parallel arcs, self-loops and terminal back-arcs.
inline Raw random_raw(std::uint64_t seed, int max_n = 12, std::int64_t max_cap = 20) {
  SplitMix rng(seed);
  Raw r;
  r.n = static_cast<int>(rng.range(2, max_n));
  r.s = static_cast<int>(rng.range(0, r.n - 1));
  do {
    r.t = static_cast<int>(rng.range(0, r.n - 1));
  } while (r.t == r.s);
  const int m = static_cast<int>(rng.range(0, 3 * r.n));
  for (int i = 0; i < m; ++i) {
    const int u = static_cast<int>(rng.range(0, r.n - 1));
    const int v = static_cast<int>(rng.range(0, r.n - 1));
    r.arcs.push_back({u, v, rng.range(0, max_cap)});
  }
  return r;
}

// Capacity of the cut whose source side is `in_s`.
inline std::int64_t cut_value(const Raw& r, const std::vector<bool>& in_s) {
  std::int64_t total = 0;
  for (const auto& a : r.arcs) {
    if (in_s[a.tail] && !in_s[a.head]) total += a.capacity;
  }
  return total;
}

// Minimum over all s-t bipartitions.
inline std::int64_t brute_min_cut(const Raw& r) {
  std::vector<int> others;
  for (int v = 0; v < r.n; ++v) {
    if (v != r.s && v != r.t) others.push_back(v);
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others.size()); ++mask) {
    std::vector<bool> in_s(r.n, false);
    in_s[r.s] = true;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask >> i & 1) in_s[others[i]] = true;
    }
    best = std::min(best, cut_value(r, in_s));
  }
  return best;
}

// Edmonds-Karp on a capacity matrix.
inline std::int64_t edmonds_karp(const Raw& r) {
  const int n = r.n;
  std::vector<std::vector<std::int64_t>> cap(n, std::vector<std::int64_t>(n, 0));
  for (const auto& a : r.arcs) {
    if (a.tail != a.head) cap[a.tail][a.head] += a.capacity;
  }
  std::int64_t total = 0;
  while (true) {
    std::vector<int> prev(n, -1);
    prev[r.s] = r.s;
    std::queue<int> q;
    q.push(r.s);
    while (!q.empty() && prev[r.t] < 0) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (prev[v] < 0 && cap[u][v] > 0) {
          prev[v] = u;
          q.push(v);
        }
      }
    }
    if (prev[r.t] < 0) return total;
    std::int64_t delta = std::numeric_limits<std::int64_t>::max();
    for (int v = r.t; v != r.s; v = prev[v]) delta = std::min(delta, cap[prev[v]][v]);
    for (int v = r.t; v != r.s; v = prev[v]) {
      cap[prev[v]][v] -= delta;
      cap[v][prev[v]] += delta;
    }
    total += delta;
  }
}

}  // namespace fixtures
