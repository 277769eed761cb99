#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "matecensus/charpoly.hpp"
#include "matecensus/graph.hpp"
#include "matecensus/int_matrix.hpp"
#include "matecensus/smith.hpp"

namespace matecensus {

enum class Flavor : std::uint8_t { Spec, Snf };

struct InvariantKind {
  Flavor flavor = Flavor::Spec;
  MatrixKind matrix = MatrixKind::A;

  int index() const noexcept { return static_cast<int>(flavor) * kMatrixKindCount + static_cast<int>(matrix); }
  static InvariantKind from_index(int index);

  friend bool operator==(const InvariantKind&, const InvariantKind&) = default;
};

inline constexpr int kInvariantKindCount = 2 * kMatrixKindCount;

// False when the value can change under vertex relabeling. Relabeling maps
// W_M to P·W_M (rows permuted, no conjugation), so the characteristic
// polynomial of a walk matrix depends on the input labeling unless its base
// has constant row sums (L and DL, where W = [e 0 ... 0]). Smith forms are
// unaffected.
constexpr bool labeling_invariant(InvariantKind k) noexcept {
  return k.flavor == Flavor::Snf || !is_walk(k.matrix) || k.matrix == MatrixKind::WL ||
         k.matrix == MatrixKind::WDL;
}

const std::vector<InvariantKind>& all_invariant_kinds();

// "spec:A", "snf:DL", "spec:WAtr" (case-insensitive on input).
std::string to_token(InvariantKind k);
std::optional<InvariantKind> parse_invariant_kind(std::string_view token);
std::string valid_tokens_help();

struct JointParam {
  InvariantKind first;
  InvariantKind second;

  friend bool operator==(const JointParam&, const JointParam&) = default;
};

// Self-delimiting serialization of one or more exact invariant values.
// Equal bytes iff equal values.
struct ParamKey {
  std::string bytes;

  friend bool operator==(const ParamKey&, const ParamKey&) = default;
  friend auto operator<=>(const ParamKey&, const ParamKey&) = default;
};

ParamKey encode(const CharPoly& p);
ParamKey encode(const SnfResult& s);
void append(ParamKey& dst, const ParamKey& src);

using InvariantValue = std::variant<CharPoly, SnfResult>;

// Inverse of encode/append: the values a key was built from, in order.
// Throws Errc::InvalidArgument on bytes that are not a valid key.
std::vector<InvariantValue> decode(const ParamKey& key);

// Both throw Errc::Disconnected on disconnected graphs.
ParamKey signature(const Graph& g, InvariantKind k);
ParamKey joint_signature(const Graph& g, const JointParam& p);

// Signatures of one graph for several kinds; matrices are built once and
// shared between the flavors.
std::vector<ParamKey> signatures(const Graph& g, std::span<const InvariantKind> kinds);

}  // namespace matecensus

template <>
struct std::hash<matecensus::ParamKey> {
  std::size_t operator()(const matecensus::ParamKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};
