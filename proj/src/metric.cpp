#include "matecensus/metric.hpp"

#include <algorithm>
#include <bit>

#include "matecensus/error.hpp"

namespace matecensus {

bool DistanceMatrix::all_finite() const noexcept {
  return std::none_of(entries_.begin(), entries_.end(), [](int d) { return d == kUnreachable; });
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<int> entries(static_cast<std::size_t>(n) * n, DistanceMatrix::kUnreachable);
  for (int s = 0; s < n; ++s) {
    // frontier-at-a-time BFS on bitmasks
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    int level = 0;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
        const int u = std::countr_zero(f);
        entries[static_cast<std::size_t>(s) * n + u] = level;
        next |= g.neighbours(u);
      }
      next &= ~seen;
      seen |= next;
      frontier = next;
      ++level;
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return false;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= g.neighbours(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n;
}

VertexStats vertex_stats(const Graph& g, const DistanceMatrix& d) {
  if (!d.all_finite()) throw Error(Errc::Disconnected, "transmission undefined on a disconnected graph");
  const int n = g.order();
  VertexStats stats;
  stats.degrees.resize(n);
  stats.transmissions.assign(n, 0);
  for (int u = 0; u < n; ++u) {
    stats.degrees[u] = g.degree(u);
    for (int v = 0; v < n; ++v) stats.transmissions[u] += d.at(u, v);
  }
  return stats;
}

}  // namespace matecensus
