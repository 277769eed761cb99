#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "matecensus/invariant.hpp"
#include "matecensus/source.hpp"

namespace matecensus {

// One invariant, or two treated as one.
struct Parameter {
  std::vector<InvariantKind> kinds;

  static Parameter single(InvariantKind k) { return {{k}}; }
  static Parameter joint(InvariantKind a, InvariantKind b) { return {{a, b}}; }
  static Parameter joint(const JointParam& p) { return joint(p.first, p.second); }

  bool is_joint() const noexcept { return kinds.size() == 2; }
  std::string token() const;  // "spec:A" or "spec:WA+snf:DL"
};

enum class Semantics {
  Joint,            // a mate must match every invariant simultaneously
  SetIntersection,  // mate for each invariant separately, possibly different graphs
};

enum class HashingMode {
  Exact,          // buckets keyed by full signature bytes
  TwoPassHashed,  // pass 1 counts 128-bit hashes, pass 2 verifies colliding ones exactly
};

std::string_view to_string(Semantics s) noexcept;

struct CensusConfig {
  Parameter parameter;
  Semantics semantics = Semantics::Joint;
  bool collect_members = false;
  HashingMode hashing = HashingMode::Exact;
  int workers = 0;  // 0: OpenMP default
  std::size_t chunk_size = 4096;
};

struct Fraction {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  Fraction reduced() const;
  std::string to_string() const;  // "p/q", reduced
  // Correctly rounded (half up) decimal with `digits` significant digits,
  // trailing zeros dropped.
  std::string decimal(int digits = 15) const;
};

struct CensusReport {
  int n = 0;
  std::string parameter;
  Semantics semantics = Semantics::Joint;
  std::uint64_t total = 0;
  std::uint64_t with_mate = 0;
  // Number of mate classes; absent under set-intersection semantics, where
  // graphs are not grouped into classes.
  std::optional<std::uint64_t> classes;

  Fraction uncertainty() const { return {with_mate, total == 0 ? 1 : total}; }

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

struct Bucket {
  std::uint64_t count = 0;
  std::vector<std::string> members;  // graph6, stream order; filled when collected
};

// ParamKey -> bucket, sharded by key hash so shards can be filled in parallel.
class ClassTable {
 public:
  static constexpr std::size_t kShards = 64;
  using Shard = std::unordered_map<ParamKey, Bucket>;

  explicit ClassTable(bool collect_members = false) : collect_members_(collect_members) {}

  static std::size_t shard_of(const ParamKey& key) noexcept;

  bool members_collected() const noexcept { return collect_members_; }
  std::span<const Shard> shards() const noexcept { return shards_; }
  Shard& shard(std::size_t i) { return shards_[i]; }

  // Graphs that a hashed census proved unique without storing their key.
  std::uint64_t unresolved_singletons() const noexcept { return singletons_; }
  void add_singletons(std::uint64_t count) noexcept { singletons_ += count; }

  std::uint64_t total() const noexcept;
  std::uint64_t bucket_count() const noexcept;

 private:
  bool collect_members_;
  std::array<Shard, kShards> shards_;
  std::uint64_t singletons_ = 0;
};

struct CensusResult {
  CensusReport report;
  ClassTable table;
};

// Errc::MixedOrder on differing orders, Errc::Disconnected on disconnected
// input. Output is independent of stream order and worker count.
CensusResult run_census(const GraphSource& source, const CensusConfig& cfg);

CensusReport run_joint_census(const GraphSource& source, const JointParam& p, Semantics semantics,
                              int workers = 0);

// Mate classes (buckets of size >= 2): members sorted, classes ordered by
// their smallest member. Errc::MembersNotCollected without members.
std::vector<std::vector<std::string>> extract_mate_classes(const ClassTable& table);

// Signature keys for a chunk, one per graph. The serial loop is the
// reference; the parallel one must agree with it element for element.
std::vector<ParamKey> compute_keys_serial(std::span<const Graph> graphs, const Parameter& p);
std::vector<ParamKey> compute_keys_parallel(std::span<const Graph> graphs, const Parameter& p, int workers);

// Per-graph invariant values interned to dense ids, for every requested kind.
// Built in one pass; any single or paired census is then answered without
// recomputing a signature.
class SignatureTable {
 public:
  SignatureTable(const GraphSource& source, std::span<const InvariantKind> kinds, int workers = 0,
                 std::size_t chunk_size = 4096);

  int order() const noexcept { return n_; }
  std::uint64_t graph_count() const noexcept { return count_; }
  bool has(InvariantKind k) const noexcept;

  CensusReport census(InvariantKind k) const;
  CensusReport census(InvariantKind a, InvariantKind b, Semantics semantics) const;

 private:
  const std::vector<std::uint32_t>& ids(InvariantKind k) const;

  int n_ = 0;
  std::uint64_t count_ = 0;
  std::array<std::optional<std::vector<std::uint32_t>>, kInvariantKindCount> ids_;
  std::array<std::vector<std::uint32_t>, kInvariantKindCount> class_sizes_;
};

struct TableCell {
  InvariantKind row;
  InvariantKind col;
  CensusReport report;
};

// One census per (row, col) pair, row-major; signatures are computed once per
// graph and kind.
std::vector<TableCell> pairwise_table(const GraphSource& source, std::span<const InvariantKind> rows,
                                      std::span<const InvariantKind> cols, Semantics semantics,
                                      int workers = 0);

// CSV: n,parameter,semantics,total,with_mate,classes,uncertainty
std::string csv_header();
std::string csv_row(const CensusReport& r);

// One class per line, members separated by single spaces.
void write_mate_classes(std::ostream& out, const std::vector<std::vector<std::string>>& classes);

}  // namespace matecensus
