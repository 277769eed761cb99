#pragma once

#include <vector>

#include "matecensus/graph.hpp"

namespace matecensus {

// All-pairs hop counts. Unreachable pairs hold kUnreachable.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  DistanceMatrix(int order, std::vector<int> entries)
      : order_(order), entries_(std::move(entries)) {}

  int order() const noexcept { return order_; }
  int at(int u, int v) const noexcept { return entries_[static_cast<std::size_t>(u) * order_ + v]; }
  bool reachable(int u, int v) const noexcept { return at(u, v) != kUnreachable; }
  bool all_finite() const noexcept;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  int order_ = 0;
  std::vector<int> entries_;
};

struct VertexStats {
  std::vector<int> degrees;
  std::vector<int> transmissions;
};

DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

// Throws Errc::Disconnected when some transmission would be infinite.
VertexStats vertex_stats(const Graph& g, const DistanceMatrix& d);

}  // namespace matecensus
