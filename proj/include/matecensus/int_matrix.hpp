#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matecensus/graph.hpp"
#include "matecensus/metric.hpp"

namespace matecensus {

// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int order) : order_(order), entries_(static_cast<std::size_t>(order) * order) {}

  static IntMatrix identity(int order);

  int order() const noexcept { return order_; }
  mpz_class& at(int i, int j) { return entries_[index(i, j)]; }
  const mpz_class& at(int i, int j) const { return entries_[index(i, j)]; }

  bool symmetric() const;
  IntMatrix permuted(std::span<const int> perm) const;  // P M P^T with vertex u -> perm[u]

  // One row per line, space-separated decimal entries.
  std::string dump() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * order_ + j;
  }

  int order_ = 0;
  std::vector<mpz_class> entries_;
};

// The ten base matrices followed by the walk lift W_B = [e, Be, ..., B^{n-1}e]
// of each base, in the same order.
enum class MatrixKind : int {
  A, L, Q, D, DL, DQ, Ddeg, DdegPlus, Atr, AtrPlus,
  WA, WL, WQ, WD, WDL, WDQ, WDdeg, WDdegPlus, WAtr, WAtrPlus,
};

inline constexpr int kBaseKindCount = 10;
inline constexpr int kMatrixKindCount = 20;

constexpr bool is_walk(MatrixKind k) noexcept { return static_cast<int>(k) >= kBaseKindCount; }

constexpr MatrixKind walk_base(MatrixKind k) noexcept {
  return is_walk(k) ? static_cast<MatrixKind>(static_cast<int>(k) - kBaseKindCount) : k;
}

constexpr MatrixKind walk_of(MatrixKind base) noexcept {
  return is_walk(base) ? base : static_cast<MatrixKind>(static_cast<int>(base) + kBaseKindCount);
}

// True for kinds whose definition involves distances or transmissions.
constexpr bool needs_distances(MatrixKind k) noexcept {
  const MatrixKind b = walk_base(k);
  return !(b == MatrixKind::A || b == MatrixKind::L || b == MatrixKind::Q);
}

const std::array<MatrixKind, kMatrixKindCount>& all_matrix_kinds() noexcept;

// "A", "DL", "WAtr", ... as accepted by the CLI.
std::string_view name(MatrixKind k) noexcept;
std::optional<MatrixKind> parse_matrix_kind(std::string_view token);  // case-insensitive

// Throws Errc::Disconnected for distance-based kinds on a disconnected graph.
IntMatrix build_matrix(MatrixKind kind, const Graph& g);

// Lazily builds and memoizes the matrices of one graph so that walk lifts
// and both invariant flavors share the distance computation.
class GraphMatrices {
 public:
  explicit GraphMatrices(const Graph& g) : graph_(g) {}

  const IntMatrix& get(MatrixKind kind);

 private:
  const VertexStats& stats();

  const Graph& graph_;
  std::optional<DistanceMatrix> distances_;
  std::optional<VertexStats> stats_;
  std::array<std::optional<IntMatrix>, kMatrixKindCount> cache_;
};

IntMatrix walk_matrix(const IntMatrix& base);

}  // namespace matecensus
