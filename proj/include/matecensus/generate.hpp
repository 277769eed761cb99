#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "matecensus/graph.hpp"

namespace matecensus {

inline constexpr int kMaxCanonicalOrder = 11;  // 55 bits
inline constexpr int kMaxGeneratedOrder = 8;

// Lexicographically least upper-triangle bit string x(0,1), x(0,2), x(1,2),
// x(0,3), ... over all relabelings, packed with x(0,1) as the most
// significant of n(n-1)/2 bits.
struct CanonicalForm {
  int order = 0;
  std::uint64_t bits = 0;

  Graph graph() const;         // the canonical representative
  std::string graph6() const;  // graph6 of the canonical representative

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Exhaustive over permutations with prefix pruning. Errc::TooLarge for n > 11.
CanonicalForm canonical_form(const Graph& g);

// Every isomorphism class on n vertices (connected or not), as canonical
// representatives sorted by canonical form. n <= 8.
std::vector<Graph> gen_all_graphs(int n, int workers = 0);

// Connected classes only; n <= 8 (Errc::TooLarge otherwise).
std::vector<Graph> gen_connected_graphs(int n, int workers = 0);

// Serial reference for the augmentation step: every graph obtained by adding
// one vertex to a parent with a neighbour subset (nonempty when
// `connected_only`), deduplicated and sorted by canonical form.
std::vector<CanonicalForm> augment_serial(const std::vector<Graph>& parents, bool connected_only);
std::vector<CanonicalForm> augment_parallel(const std::vector<Graph>& parents, bool connected_only,
                                            int workers);

// Free trees via the Wright-Richmond-Odlyzko-McKay successor on canonical
// level sequences; constant amortized time per tree.
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(int n);

  // 1-based level of each vertex in preorder; the root has level 1.
  const std::vector<int>& levels() const noexcept { return levels_; }
  Graph graph() const;
  // Moves to the next tree; false when the sequence is exhausted.
  bool advance();

 private:
  int n_;
  bool done_ = false;
  // 1-based working arrays: L = levels, W = parent index (0 for the root)
  std::vector<int> L_, W_;
  int p_ = 0, q_ = 0, h1_ = 0, h2_ = 0, r_ = 0, c_ = 0;
  std::vector<int> levels_;
};

// Vertex i of the level sequence (0-based preorder) is joined to the nearest
// earlier vertex whose level is one less.
Graph tree_from_levels(const std::vector<int>& levels);

void for_each_tree(int n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> gen_trees(int n);

}  // namespace matecensus
