#include "matecensus/census.hpp"

#include <omp.h>

#include <algorithm>
#include <gmpxx.h>
#include <numeric>

#include "matecensus/error.hpp"
#include "matecensus/graph6.hpp"
#include "parallel.hpp"

namespace matecensus {

namespace {

struct Hash128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  friend bool operator==(const Hash128&, const Hash128&) = default;
};

struct Hash128Hasher {
  std::size_t operator()(const Hash128& h) const noexcept { return static_cast<std::size_t>(h.lo ^ (h.hi * 0x9E3779B97F4A7C15ULL)); }
};

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Two independently seeded FNV-1a lanes with a splitmix finalizer; only used
// to pre-bucket, equality is always re-verified on the full key.
Hash128 hash128(const ParamKey& key) {
  std::uint64_t a = 0xCBF29CE484222325ULL;
  std::uint64_t b = 0x84222325CBF29CE4ULL ^ key.bytes.size();
  for (unsigned char c : key.bytes) {
    a = (a ^ c) * 0x100000001B3ULL;
    b = (b ^ (c + 0x5BU)) * 0x100000001B3ULL;
  }
  return {mix64(a), mix64(b + 0x9E3779B97F4A7C15ULL)};
}

ParamKey key_for(const Graph& g, const Parameter& p) {
  auto keys = signatures(g, p.kinds);
  for (std::size_t i = 1; i < keys.size(); ++i) append(keys[0], keys[i]);
  return std::move(keys[0]);
}

void validate(const Parameter& p) {
  if (p.kinds.empty() || p.kinds.size() > 2) {
    throw Error(Errc::InvalidArgument, "a parameter has one or two invariants");
  }
}

// Tracks the common order of a stream; MixedOrder on the first mismatch.
class OrderCheck {
 public:
  void check(std::span<const Graph> graphs) {
    for (const auto& g : graphs) {
      if (n_ < 0) n_ = g.order();
      if (g.order() != n_) {
        throw Error(Errc::MixedOrder, "stream mixes graphs of order " + std::to_string(n_) + " and " +
                                          std::to_string(g.order()));
      }
    }
  }
  int n() const noexcept { return std::max(n_, 0); }

 private:
  int n_ = -1;
};

void summarize(const ClassTable& table, CensusReport& report) {
  report.total = table.total();
  report.with_mate = 0;
  std::uint64_t classes = 0;
  for (const auto& shard : table.shards()) {
    for (const auto& [key, bucket] : shard) {
      if (bucket.count >= 2) {
        report.with_mate += bucket.count;
        ++classes;
      }
    }
  }
  report.classes = classes;
}

// Inserts keys[i] (with member graph6[i] when collected) into the table.
// Each shard is owned by one thread, and within a shard insertion follows
// stream order, so the result does not depend on the worker count.
void aggregate(ClassTable& table, std::vector<ParamKey>& keys, std::span<const Graph> graphs,
               std::span<const std::size_t> which, int workers) {
  const bool collect = table.members_collected();
  std::vector<std::uint8_t> shard_ids(which.size());
  std::vector<std::string> g6(collect ? which.size() : 0);
  const auto count = static_cast<std::int64_t>(which.size());
#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    shard_ids[i] = static_cast<std::uint8_t>(ClassTable::shard_of(keys[i]));
    if (collect) g6[i] = encode_graph6(graphs[which[i]]);
  }
  const auto shards = static_cast<std::int64_t>(ClassTable::kShards);
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (std::int64_t s = 0; s < shards; ++s) {
    auto& shard = table.shard(static_cast<std::size_t>(s));
    for (std::int64_t i = 0; i < count; ++i) {
      if (shard_ids[i] != s) continue;
      Bucket& b = shard[std::move(keys[i])];
      ++b.count;
      if (collect) b.members.push_back(std::move(g6[i]));
    }
  }
}

std::vector<std::size_t> iota_indices(std::size_t n) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

CensusResult census_exact(const GraphSource& source, const CensusConfig& cfg, int workers) {
  CensusResult result{{}, ClassTable(cfg.collect_members)};
  OrderCheck order;
  source.for_each_chunk(cfg.chunk_size, [&](std::span<const Graph> graphs) {
    order.check(graphs);
    auto keys = compute_keys_parallel(graphs, cfg.parameter, workers);
    const auto idx = iota_indices(graphs.size());
    aggregate(result.table, keys, graphs, idx, workers);
  });
  result.report.n = order.n();
  summarize(result.table, result.report);
  return result;
}

CensusResult census_hashed(const GraphSource& source, const CensusConfig& cfg, int workers) {
  CensusResult result{{}, ClassTable(cfg.collect_members)};
  OrderCheck order;
  std::vector<Hash128> hashes;
  std::unordered_map<Hash128, std::uint32_t, Hash128Hasher> counts;
  source.for_each_chunk(cfg.chunk_size, [&](std::span<const Graph> graphs) {
    order.check(graphs);
    const auto keys = compute_keys_parallel(graphs, cfg.parameter, workers);
    for (const auto& k : keys) {
      hashes.push_back(hash128(k));
      ++counts[hashes.back()];
    }
  });

  std::size_t offset = 0;
  source.for_each_chunk(cfg.chunk_size, [&](std::span<const Graph> graphs) {
    std::vector<std::size_t> colliding;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (offset + i >= hashes.size()) throw Error(Errc::Io, "source changed between passes");
      if (counts[hashes[offset + i]] >= 2) {
        colliding.push_back(i);
      } else {
        result.table.add_singletons(1);
      }
    }
    std::vector<Graph> subset;
    subset.reserve(colliding.size());
    for (auto i : colliding) subset.push_back(graphs[i]);
    auto keys = compute_keys_parallel(subset, cfg.parameter, workers);
    const auto idx = iota_indices(subset.size());
    aggregate(result.table, keys, subset, idx, workers);
    offset += graphs.size();
  });
  if (offset != hashes.size()) throw Error(Errc::Io, "source changed between passes");
  result.report.n = order.n();
  summarize(result.table, result.report);
  return result;
}

}  // namespace

std::string Parameter::token() const {
  std::string out;
  for (const auto& k : kinds) {
    if (!out.empty()) out += '+';
    out += to_token(k);
  }
  return out;
}

std::string_view to_string(Semantics s) noexcept {
  return s == Semantics::Joint ? "joint" : "intersection";
}

Fraction Fraction::reduced() const {
  const std::uint64_t g = std::gcd(numerator, denominator);
  if (g == 0) return *this;
  return {numerator / g, denominator / g};
}

std::string Fraction::to_string() const {
  const Fraction r = reduced();
  return std::to_string(r.numerator) + "/" + std::to_string(r.denominator);
}

std::string Fraction::decimal(int digits) const {
  if (numerator == 0) return "0";
  const mpz_class num(static_cast<unsigned long>(numerator));
  const mpz_class den(static_cast<unsigned long>(denominator));
  // 10^e <= num/den < 10^(e+1)
  int e = 0;
  auto ten_pow = [](int k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return p;
  };
  while (num >= den * ten_pow(e + 1)) ++e;
  while (e < 0 ? num * ten_pow(-e) < den : num < den * ten_pow(e)) --e;
  int shift = digits - 1 - e;
  auto scaled = [&](int s) {
    mpz_class a = s >= 0 ? num * ten_pow(s) : num;
    mpz_class b = s >= 0 ? den : den * ten_pow(-s);
    return mpz_class((2 * a + b) / (2 * b));  // half up
  };
  mpz_class q = scaled(shift);
  if (q >= ten_pow(digits)) q = scaled(--shift);

  std::string s = q.get_str();
  if (shift > 0) {
    if (static_cast<int>(s.size()) <= shift) s.insert(0, static_cast<std::size_t>(shift) - s.size() + 1, '0');
    s.insert(s.size() - static_cast<std::size_t>(shift), ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  } else if (shift < 0) {
    s.append(static_cast<std::size_t>(-shift), '0');
  }
  return s;
}

std::size_t ClassTable::shard_of(const ParamKey& key) noexcept {
  return std::hash<ParamKey>{}(key) % kShards;
}

std::uint64_t ClassTable::total() const noexcept {
  std::uint64_t total = singletons_;
  for (const auto& shard : shards_) {
    for (const auto& [key, bucket] : shard) total += bucket.count;
  }
  return total;
}

std::uint64_t ClassTable::bucket_count() const noexcept {
  std::uint64_t count = singletons_;
  for (const auto& shard : shards_) count += shard.size();
  return count;
}

std::vector<ParamKey> compute_keys_serial(std::span<const Graph> graphs, const Parameter& p) {
  validate(p);
  std::vector<ParamKey> keys;
  keys.reserve(graphs.size());
  for (const auto& g : graphs) keys.push_back(key_for(g, p));
  return keys;
}

std::vector<ParamKey> compute_keys_parallel(std::span<const Graph> graphs, const Parameter& p, int workers) {
  validate(p);
  std::vector<ParamKey> keys(graphs.size());
  detail::FirstError error;
  const auto count = static_cast<std::int64_t>(graphs.size());
#pragma omp parallel for num_threads(detail::resolve_workers(workers)) schedule(dynamic, 8)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      keys[i] = key_for(graphs[i], p);
    } catch (...) {
      error.record(i, std::current_exception());
    }
  }
  error.rethrow();
  return keys;
}

CensusResult run_census(const GraphSource& source, const CensusConfig& cfg) {
  validate(cfg.parameter);
  const int workers = detail::resolve_workers(cfg.workers);
  CensusResult result{{}, ClassTable(cfg.collect_members)};

  if (cfg.semantics == Semantics::SetIntersection) {
    if (!cfg.parameter.is_joint()) {
      throw Error(Errc::InvalidArgument, "set-intersection semantics needs two invariants");
    }
    if (cfg.collect_members) {
      throw Error(Errc::InvalidArgument, "set-intersection semantics does not form mate classes");
    }
    const SignatureTable table(source, cfg.parameter.kinds, workers, cfg.chunk_size);
    result.report = table.census(cfg.parameter.kinds[0], cfg.parameter.kinds[1], Semantics::SetIntersection);
    return result;
  }

  result = cfg.hashing == HashingMode::Exact ? census_exact(source, cfg, workers)
                                             : census_hashed(source, cfg, workers);
  result.report.parameter = cfg.parameter.token();
  result.report.semantics = cfg.semantics;
  return result;
}

CensusReport run_joint_census(const GraphSource& source, const JointParam& p, Semantics semantics, int workers) {
  CensusConfig cfg;
  cfg.parameter = Parameter::joint(p);
  cfg.semantics = semantics;
  cfg.workers = workers;
  return run_census(source, cfg).report;
}

std::vector<std::vector<std::string>> extract_mate_classes(const ClassTable& table) {
  if (!table.members_collected()) throw Error(Errc::MembersNotCollected, "census ran without member collection");
  std::vector<std::vector<std::string>> classes;
  for (const auto& shard : table.shards()) {
    for (const auto& [key, bucket] : shard) {
      if (bucket.count < 2) continue;
      auto members = bucket.members;
      std::sort(members.begin(), members.end());
      classes.push_back(std::move(members));
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

// ---------------------------------------------------------------------------

SignatureTable::SignatureTable(const GraphSource& source, std::span<const InvariantKind> kinds, int workers,
                               std::size_t chunk_size) {
  std::vector<InvariantKind> distinct;
  for (const auto& k : kinds) {
    if (std::find(distinct.begin(), distinct.end(), k) == distinct.end()) distinct.push_back(k);
  }
  const int w = detail::resolve_workers(workers);
  const auto kind_count = static_cast<std::int64_t>(distinct.size());
  std::vector<std::unordered_map<ParamKey, std::uint32_t>> dictionaries(distinct.size());
  for (const auto& k : distinct) ids_[k.index()].emplace();

  OrderCheck order;
  source.for_each_chunk(chunk_size, [&](std::span<const Graph> graphs) {
    order.check(graphs);
    const auto count = static_cast<std::int64_t>(graphs.size());
    std::vector<std::vector<ParamKey>> keys(graphs.size());
    detail::FirstError error;
#pragma omp parallel for num_threads(w) schedule(dynamic, 8)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        keys[i] = signatures(graphs[i], distinct);
      } catch (...) {
        error.record(i, std::current_exception());
      }
    }
    error.rethrow();

#pragma omp parallel for num_threads(w) schedule(dynamic, 1)
    for (std::int64_t k = 0; k < kind_count; ++k) {
      auto& dict = dictionaries[k];
      auto& ids = *ids_[distinct[k].index()];
      for (std::int64_t i = 0; i < count; ++i) {
        auto [it, inserted] = dict.try_emplace(std::move(keys[i][k]), static_cast<std::uint32_t>(dict.size()));
        ids.push_back(it->second);
      }
    }
    count_ += graphs.size();
  });
  n_ = order.n();

  for (std::size_t k = 0; k < distinct.size(); ++k) {
    auto& sizes = class_sizes_[distinct[k].index()];
    sizes.assign(dictionaries[k].size(), 0);
    for (auto id : *ids_[distinct[k].index()]) ++sizes[id];
  }
}

bool SignatureTable::has(InvariantKind k) const noexcept { return ids_[k.index()].has_value(); }

const std::vector<std::uint32_t>& SignatureTable::ids(InvariantKind k) const {
  if (!has(k)) throw Error(Errc::InvalidArgument, to_token(k) + " was not computed for this table");
  return *ids_[k.index()];
}

CensusReport SignatureTable::census(InvariantKind k) const {
  ids(k);
  CensusReport r;
  r.n = n_;
  r.parameter = to_token(k);
  r.semantics = Semantics::Joint;
  r.total = count_;
  std::uint64_t classes = 0;
  for (auto size : class_sizes_[k.index()]) {
    if (size >= 2) {
      r.with_mate += size;
      ++classes;
    }
  }
  r.classes = classes;
  return r;
}

CensusReport SignatureTable::census(InvariantKind a, InvariantKind b, Semantics semantics) const {
  const auto& ia = ids(a);
  const auto& ib = ids(b);
  CensusReport r;
  r.n = n_;
  r.parameter = Parameter::joint(a, b).token();
  r.semantics = semantics;
  r.total = count_;
  if (semantics == Semantics::SetIntersection) {
    const auto& sa = class_sizes_[a.index()];
    const auto& sb = class_sizes_[b.index()];
    for (std::size_t g = 0; g < ia.size(); ++g) {
      if (sa[ia[g]] >= 2 && sb[ib[g]] >= 2) ++r.with_mate;
    }
    return r;
  }
  std::vector<std::uint64_t> pairs(ia.size());
  for (std::size_t g = 0; g < ia.size(); ++g) pairs[g] = (std::uint64_t{ia[g]} << 32) | ib[g];
  std::sort(pairs.begin(), pairs.end());
  std::uint64_t classes = 0;
  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i;
    while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
    if (j - i >= 2) {
      r.with_mate += j - i;
      ++classes;
    }
    i = j;
  }
  r.classes = classes;
  return r;
}

std::vector<TableCell> pairwise_table(const GraphSource& source, std::span<const InvariantKind> rows,
                                      std::span<const InvariantKind> cols, Semantics semantics, int workers) {
  if (rows.empty() || cols.empty()) throw Error(Errc::InvalidArgument, "table needs rows and columns");
  std::vector<InvariantKind> kinds(rows.begin(), rows.end());
  kinds.insert(kinds.end(), cols.begin(), cols.end());
  const SignatureTable table(source, kinds, workers);
  std::vector<TableCell> cells;
  cells.reserve(rows.size() * cols.size());
  for (const auto& r : rows) {
    for (const auto& c : cols) cells.push_back({r, c, table.census(r, c, semantics)});
  }
  return cells;
}

std::string csv_header() { return "n,parameter,semantics,total,with_mate,classes,uncertainty"; }

std::string csv_row(const CensusReport& r) {
  const bool single = r.parameter.find('+') == std::string::npos;
  const Fraction u = r.uncertainty();
  std::string out = std::to_string(r.n);
  out += ',' + r.parameter;
  out += ',' + std::string(single ? "single" : to_string(r.semantics));
  out += ',' + std::to_string(r.total);
  out += ',' + std::to_string(r.with_mate);
  out += ',' + (r.classes ? std::to_string(*r.classes) : std::string("-"));
  out += ',' + u.to_string() + '=' + u.decimal();
  return out;
}

void write_mate_classes(std::ostream& out, const std::vector<std::vector<std::string>>& classes) {
  for (const auto& cls : classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i > 0) out << ' ';
      out << cls[i];
    }
    out << '\n';
  }
}

}  // namespace matecensus
