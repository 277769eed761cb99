#include "matecensus/int_matrix.hpp"

#include <algorithm>
#include <cctype>

#include "matecensus/error.hpp"

namespace matecensus {

IntMatrix IntMatrix::identity(int order) {
  IntMatrix m(order);
  for (int i = 0; i < order; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::symmetric() const {
  for (int i = 0; i < order_; ++i) {
    for (int j = i + 1; j < order_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::permuted(std::span<const int> perm) const {
  IntMatrix out(order_);
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) out.at(perm[i], perm[j]) = at(i, j);
  }
  return out;
}

std::string IntMatrix::dump() const {
  std::string out;
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      if (j > 0) out += ' ';
      out += at(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

const std::array<MatrixKind, kMatrixKindCount>& all_matrix_kinds() noexcept {
  static const std::array<MatrixKind, kMatrixKindCount> kinds = [] {
    std::array<MatrixKind, kMatrixKindCount> k{};
    for (int i = 0; i < kMatrixKindCount; ++i) k[i] = static_cast<MatrixKind>(i);
    return k;
  }();
  return kinds;
}

namespace {

constexpr std::array<std::string_view, kMatrixKindCount> kNames = {
    "A",  "L",  "Q",  "D",  "DL",  "DQ",  "Ddeg",  "DdegPlus",  "Atr",  "AtrPlus",
    "WA", "WL", "WQ", "WD", "WDL", "WDQ", "WDdeg", "WDdegPlus", "WAtr", "WAtrPlus",
};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

std::string_view name(MatrixKind k) noexcept { return kNames[static_cast<int>(k)]; }

std::optional<MatrixKind> parse_matrix_kind(std::string_view token) {
  for (int i = 0; i < kMatrixKindCount; ++i) {
    if (iequals(token, kNames[i])) return static_cast<MatrixKind>(i);
  }
  return std::nullopt;
}

IntMatrix walk_matrix(const IntMatrix& base) {
  const int n = base.order();
  IntMatrix w(n);
  std::vector<mpz_class> col(n, 1), next(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) w.at(i, j) = col[i];
    if (j + 1 == n) break;
    for (int i = 0; i < n; ++i) {
      next[i] = 0;
      for (int k = 0; k < n; ++k) {
        if (sgn(base.at(i, k)) != 0) mpz_addmul(next[i].get_mpz_t(), base.at(i, k).get_mpz_t(), col[k].get_mpz_t());
      }
    }
    col.swap(next);
  }
  return w;
}

const VertexStats& GraphMatrices::stats() {
  if (!stats_) {
    distances_ = all_pairs_distances(graph_);
    if (!distances_->all_finite()) {
      throw Error(Errc::Disconnected, "distance-based matrix requested for a disconnected graph");
    }
    stats_ = vertex_stats(graph_, *distances_);
  }
  return *stats_;
}

const IntMatrix& GraphMatrices::get(MatrixKind kind) {
  auto& slot = cache_[static_cast<int>(kind)];
  if (slot) return *slot;

  if (is_walk(kind)) {
    slot = walk_matrix(get(walk_base(kind)));
    return *slot;
  }

  const int n = graph_.order();
  IntMatrix m(n);
  // diagonal term (deg / tr / none) and off-diagonal sign times (A or D)
  int diag_sign = 0;
  bool use_transmission = false;
  bool use_distance = false;
  int off_sign = 1;
  switch (kind) {
    case MatrixKind::A: break;
    case MatrixKind::L: diag_sign = 1; off_sign = -1; break;
    case MatrixKind::Q: diag_sign = 1; break;
    case MatrixKind::D: use_distance = true; break;
    case MatrixKind::DL: diag_sign = 1; use_transmission = true; use_distance = true; off_sign = -1; break;
    case MatrixKind::DQ: diag_sign = 1; use_transmission = true; use_distance = true; break;
    case MatrixKind::Ddeg: diag_sign = 1; use_distance = true; off_sign = -1; break;
    case MatrixKind::DdegPlus: diag_sign = 1; use_distance = true; break;
    case MatrixKind::Atr: diag_sign = 1; use_transmission = true; off_sign = -1; break;
    case MatrixKind::AtrPlus: diag_sign = 1; use_transmission = true; break;
    default: break;
  }

  if (use_distance || use_transmission) stats();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int base = use_distance ? distances_->at(i, j) : (graph_.adjacent(i, j) ? 1 : 0);
      m.at(i, j) = off_sign * base;
    }
    if (diag_sign != 0) {
      m.at(i, i) = use_transmission ? stats_->transmissions[i] : graph_.degree(i);
    }
  }
  slot = std::move(m);
  return *slot;
}

IntMatrix build_matrix(MatrixKind kind, const Graph& g) {
  GraphMatrices matrices(g);
  return matrices.get(kind);
}

}  // namespace matecensus
