#include "matecensus/generate.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <set>

#include "matecensus/error.hpp"
#include "matecensus/graph6.hpp"
#include "parallel.hpp"

namespace matecensus {

namespace {

using Rows = std::array<std::uint64_t, kMaxCanonicalOrder>;

struct Partial {
  std::array<std::uint8_t, kMaxCanonicalOrder> perm;
  std::uint16_t used;
};

// Two partial labelings with the same placed set and the same adjacency from
// every unplaced vertex to each filled position have identical futures; keep
// one. Without this, highly symmetric graphs keep up to n! partials.
void merge_equivalent(std::vector<Partial>& partials, const Rows& rows, int n, int placed) {
  if (partials.size() < 32) return;
  using Key = std::array<std::uint16_t, kMaxCanonicalOrder + 1>;
  std::vector<std::pair<Key, std::size_t>> keys;
  keys.reserve(partials.size());
  for (std::size_t idx = 0; idx < partials.size(); ++idx) {
    const Partial& p = partials[idx];
    Key key{};
    key[0] = p.used;
    for (int v = 0; v < n; ++v) {
      if ((p.used >> v) & 1U) continue;
      std::uint16_t block = 0;
      for (int i = 0; i < placed; ++i) block = static_cast<std::uint16_t>((block << 1) | ((rows[p.perm[i]] >> v) & 1U));
      key[v + 1] = block;
    }
    keys.emplace_back(key, idx);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<Partial> kept;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i == 0 || keys[i].first != keys[i - 1].first) kept.push_back(partials[keys[i].second]);
  }
  partials.swap(kept);
}

// Places vertices one position at a time; a partial labeling survives only
// while its bit prefix equals the least prefix reachable at that depth.
std::uint64_t canonical_bits(const Rows& rows, int n) {
  if (n <= 1) return 0;
  std::vector<Partial> current, next;
  current.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    Partial p{};
    p.perm[0] = static_cast<std::uint8_t>(v);
    p.used = static_cast<std::uint16_t>(1U << v);
    current.push_back(p);
  }
  std::uint64_t bits = 0;
  for (int j = 1; j < n; ++j) {
    unsigned best = UINT_MAX;
    next.clear();
    for (const Partial& p : current) {
      for (int v = 0; v < n; ++v) {
        if ((p.used >> v) & 1U) continue;
        unsigned block = 0;
        for (int i = 0; i < j; ++i) block = (block << 1) | ((rows[p.perm[i]] >> v) & 1U);
        if (block > best) continue;
        if (block < best) {
          best = block;
          next.clear();
        }
        Partial q = p;
        q.perm[j] = static_cast<std::uint8_t>(v);
        q.used = static_cast<std::uint16_t>(q.used | (1U << v));
        next.push_back(q);
      }
    }
    bits = (bits << j) | best;
    current.swap(next);
    if (j + 1 < n) merge_equivalent(current, rows, n, j + 1);
  }
  return bits;
}

bool rows_connected(const Rows& rows, int n) {
  std::uint64_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= rows[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n;
}

Rows load_rows(const Graph& g) {
  Rows rows{};
  for (int u = 0; u < g.order(); ++u) rows[u] = g.neighbours(u);
  return rows;
}

// Calls emit(bits) for every admissible one-vertex extension of `parent`.
template <class Emit>
void extend(const Graph& parent, bool connected_only, Emit&& emit) {
  const int m = parent.order();
  const int n = m + 1;
  const Rows base = load_rows(parent);
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t mask = connected_only ? 1 : 0; mask < subsets; ++mask) {
    Rows rows = base;
    rows[m] = mask;
    for (std::uint64_t b = mask; b != 0; b &= b - 1) rows[std::countr_zero(b)] |= std::uint64_t{1} << m;
    if (connected_only && !rows_connected(rows, n)) continue;
    emit(canonical_bits(rows, n));
  }
}

void check_parents(const std::vector<Graph>& parents) {
  for (const auto& g : parents) {
    if (g.order() + 1 > kMaxCanonicalOrder) {
      throw Error(Errc::TooLarge, "augmentation beyond " + std::to_string(kMaxCanonicalOrder) + " vertices");
    }
  }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error(Errc::TooLarge, "canonical form limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  return {g.order(), canonical_bits(load_rows(g), g.order())};
}

Graph CanonicalForm::graph() const {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(order), 0);
  int remaining = order * (order - 1) / 2;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u) {
      --remaining;
      if ((bits >> remaining) & 1U) {
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
      }
    }
  }
  return Graph(order, std::move(rows));
}

std::string CanonicalForm::graph6() const { return encode_graph6(graph()); }

std::vector<CanonicalForm> augment_serial(const std::vector<Graph>& parents, bool connected_only) {
  check_parents(parents);
  std::set<CanonicalForm> seen;
  for (const auto& parent : parents) {
    const int n = parent.order() + 1;
    extend(parent, connected_only, [&](std::uint64_t bits) { seen.insert({n, bits}); });
  }
  return {seen.begin(), seen.end()};
}

std::vector<CanonicalForm> augment_parallel(const std::vector<Graph>& parents, bool connected_only,
                                            int workers) {
  check_parents(parents);
  std::vector<std::vector<CanonicalForm>> per_thread(static_cast<std::size_t>(detail::resolve_workers(workers)));
  const auto count = static_cast<std::int64_t>(parents.size());
#pragma omp parallel num_threads(static_cast<int>(per_thread.size()))
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
      const Graph& parent = parents[static_cast<std::size_t>(i)];
      const int n = parent.order() + 1;
      extend(parent, connected_only, [&](std::uint64_t bits) { local.push_back({n, bits}); });
      // keep thread-local buffers small
      if (local.size() > (1U << 16)) {
        std::sort(local.begin(), local.end());
        local.erase(std::unique(local.begin(), local.end()), local.end());
      }
    }
  }
  std::vector<CanonicalForm> all;
  for (auto& local : per_thread) all.insert(all.end(), local.begin(), local.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<Graph> gen_all_graphs(int n, int workers) {
  if (n < 1) throw Error(Errc::InvalidArgument, "order must be at least 1");
  if (n > kMaxGeneratedOrder) throw Error(Errc::TooLarge, "built-in generator supports n <= 8");
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    const auto forms = augment_parallel(level, false, workers);
    level.clear();
    level.reserve(forms.size());
    for (const auto& f : forms) level.push_back(f.graph());
  }
  return level;
}

std::vector<Graph> gen_connected_graphs(int n, int workers) {
  if (n < 1) throw Error(Errc::InvalidArgument, "order must be at least 1");
  if (n > kMaxGeneratedOrder) throw Error(Errc::TooLarge, "built-in generator supports n <= 8");
  if (n == 1) return {Graph(1)};
  const auto forms = augment_parallel(gen_all_graphs(n - 1, workers), true, workers);
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(f.graph());
  return out;
}

// ---------------------------------------------------------------------------
// Free trees

namespace {
constexpr int kInf = INT_MAX / 2;
}

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder) throw Error(Errc::Unsupported, "tree order must be in 1..62");
  if (n <= 2) {
    levels_ = n == 1 ? std::vector<int>{1} : std::vector<int>{1, 2};
    return;
  }
  L_.assign(static_cast<std::size_t>(n) + 2, 0);
  W_.assign(static_cast<std::size_t>(n) + 2, 0);
  // start from the path rooted at its centre
  const int k = n / 2 + 1;
  p_ = n == 4 ? 3 : n;
  q_ = n - 1;
  h1_ = k;
  h2_ = n;
  r_ = k;
  c_ = n % 2 != 0 ? kInf : n + 1;
  for (int i = 1; i <= k; ++i) {
    L_[i] = i;
    W_[i] = i - 1;
  }
  W_[k + 1] = 1;
  L_[k + 1] = 2;
  for (int i = k + 2; i <= n; ++i) {
    L_[i] = i - k + 1;
    W_[i] = i - 1;
  }
  if (n <= 3) q_ = 0;
  levels_.assign(L_.begin() + 1, L_.begin() + n + 1);
}

bool FreeTreeGenerator::advance() {
  if (done_) return false;
  if (n_ <= 2 || q_ == 0) {
    done_ = true;
    return false;
  }
  const int n = n_;
  auto& L = L_;
  auto& W = W_;
  bool fixit = false;
  if (c_ == n + 1 ||
      (p_ == h2_ && ((L[h1_] == L[h2_] + 1 && n - h2_ > r_ - h1_) ||
                     (L[h1_] == L[h2_] && n - h2_ + 1 < r_ - h1_)))) {
    if (L[r_] > 3) {
      p_ = r_;
      q_ = W[r_];
      if (h1_ == r_) h1_ = h1_ - 1;
      fixit = true;
    } else {
      p_ = r_;
      r_ = r_ - 1;
      q_ = 2;
    }
  }

  bool need_r = false, need_c = false, need_h2 = false;
  if (p_ <= h1_) h1_ = p_ - 1;
  if (p_ <= r_) {
    need_r = true;
  } else if (p_ <= h2_) {
    need_h2 = true;
  } else if (L[h2_] == L[h1_] - 1 && n - h2_ == r_ - h1_) {
    if (p_ <= c_) need_c = true;
  } else {
    c_ = kInf;
  }

  const int old_p = p_;
  const int delta = q_ - p_;
  const int old_lq = L[q_];
  const int old_wq = W[q_];
  p_ = kInf;
  for (int i = old_p; i <= n; ++i) {
    L[i] = L[i + delta];
    if (L[i] == 2) {
      W[i] = 1;
    } else {
      p_ = i;
      q_ = L[i] == old_lq ? old_wq : W[i + delta] - delta;
      W[i] = q_;
    }
    if (need_r && L[i] == 2) {
      need_r = false;
      need_h2 = true;
      r_ = i - 1;
    }
    if (need_h2 && L[i] <= L[i - 1] && i > r_ + 1) {
      need_h2 = false;
      h2_ = i - 1;
      if (L[h2_] == L[h1_] - 1 && n - h2_ == r_ - h1_) {
        need_c = true;
      } else {
        c_ = kInf;
      }
    }
    if (need_c) {
      if (L[i] != L[h1_ - h2_ + i] - 1) {
        need_c = false;
        c_ = i;
      } else {
        c_ = i + 1;
      }
    }
  }

  if (fixit) {
    r_ = n - h1_ + 1;
    for (int i = r_ + 1; i <= n; ++i) {
      L[i] = i - r_ + 1;
      W[i] = i - 1;
    }
    W[r_ + 1] = 1;
    h2_ = n;
    p_ = n;
    q_ = p_ - 1;
    c_ = kInf;
  } else {
    if (p_ == kInf) {
      p_ = L[old_p - 1] != 2 ? old_p - 1 : old_p - 2;
      q_ = W[p_];
    }
    if (need_h2) {
      h2_ = n;
      c_ = (L[h2_] == L[h1_] - 1 && h1_ == r_) ? n + 1 : kInf;
    }
  }
  std::copy(L.begin() + 1, L.begin() + n + 1, levels_.begin());
  return true;
}

Graph FreeTreeGenerator::graph() const { return tree_from_levels(levels_); }

Graph tree_from_levels(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  edges.reserve(levels.size());
  std::vector<int> last_at_level(static_cast<std::size_t>(n) + 2, -1);
  for (int i = 0; i < n; ++i) {
    const int lv = levels[i];
    if (lv < 1 || lv > n || (i == 0) != (lv == 1) || (i > 0 && last_at_level[lv - 1] < 0)) {
      throw Error(Errc::InvalidArgument, "not a rooted level sequence");
    }
    if (i > 0) edges.emplace_back(last_at_level[lv - 1], i);
    last_at_level[lv] = i;
  }
  return Graph(n, edges);
}

void for_each_tree(int n, const std::function<void(const Graph&)>& visit) {
  FreeTreeGenerator gen(n);
  do {
    visit(gen.graph());
  } while (gen.advance());
}

std::vector<Graph> gen_trees(int n) {
  std::vector<Graph> out;
  for_each_tree(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace matecensus
