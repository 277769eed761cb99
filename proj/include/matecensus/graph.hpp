#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace matecensus {

inline constexpr int kMaxOrder = 62;

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Each row is a bitmask of
// neighbours, so n is limited to 62 (the short graph6 range).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);
  // rows[u] bit v set iff u~v; validated for symmetry and empty diagonal
  Graph(int order, std::vector<std::uint64_t> rows);

  int order() const noexcept { return order_; }
  bool adjacent(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }
  std::uint64_t neighbours(int u) const noexcept { return rows_[u]; }
  int degree(int u) const noexcept { return std::popcount(rows_[u]); }
  int edge_count() const noexcept;
  std::vector<Edge> edges() const;

  // Vertex u of *this becomes vertex perm[u] of the result.
  Graph relabeled(std::span<const int> perm) const;

  // One extra vertex n adjacent to the vertices set in `mask`.
  Graph with_vertex(std::uint64_t mask) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int order_ = 0;
  std::vector<std::uint64_t> rows_;
};

}  // namespace matecensus
