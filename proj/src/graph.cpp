#include "matecensus/graph.hpp"

#include <string>

#include "matecensus/error.hpp"

namespace matecensus {

namespace {

void check_order(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw Error(Errc::Unsupported, "graph order " + std::to_string(order) + " outside 0.." +
                                       std::to_string(kMaxOrder));
  }
}

}  // namespace

Graph::Graph(int order) : order_(order) {
  check_order(order);
  rows_.assign(static_cast<std::size_t>(order), 0);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order || u == v) {
      throw Error(Errc::InvalidArgument,
                  "bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  }
}

Graph::Graph(int order, std::vector<std::uint64_t> rows) : order_(order), rows_(std::move(rows)) {
  check_order(order);
  if (rows_.size() != static_cast<std::size_t>(order)) {
    throw Error(Errc::InvalidArgument, "row count does not match order");
  }
  const std::uint64_t valid = order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
  for (int u = 0; u < order; ++u) {
    if ((rows_[u] & ~valid) != 0 || adjacent(u, u)) {
      throw Error(Errc::InvalidArgument, "row " + std::to_string(u) + " has loop or stray bits");
    }
    for (int v = u + 1; v < order; ++v) {
      if (adjacent(u, v) != adjacent(v, u)) {
        throw Error(Errc::InvalidArgument, "adjacency is not symmetric");
      }
    }
  }
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (auto row : rows_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int v = 1; v < order_; ++v) {
    for (int u = 0; u < v; ++u) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (perm.size() != rows_.size()) {
    throw Error(Errc::InvalidArgument, "permutation size does not match order");
  }
  std::uint64_t seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= order_ || ((seen >> p) & 1U)) throw Error(Errc::InvalidArgument, "not a permutation");
    seen |= std::uint64_t{1} << p;
  }
  std::vector<std::uint64_t> rows(rows_.size(), 0);
  for (int u = 0; u < order_; ++u) {
    std::uint64_t row = rows_[u];
    while (row != 0) {
      const int v = std::countr_zero(row);
      row &= row - 1;
      rows[perm[u]] |= std::uint64_t{1} << perm[v];
    }
  }
  return Graph(order_, std::move(rows));
}

Graph Graph::with_vertex(std::uint64_t mask) const {
  if (order_ + 1 > kMaxOrder) throw Error(Errc::Unsupported, "graph order would exceed 62");
  std::vector<std::uint64_t> rows = rows_;
  rows.push_back(mask);
  for (int u = 0; u < order_; ++u) {
    if ((mask >> u) & 1U) rows[u] |= std::uint64_t{1} << order_;
  }
  return Graph(order_ + 1, std::move(rows));
}

}  // namespace matecensus
