#include "matecensus/smith.hpp"

#include <optional>
#include <utility>

#include "checked_int.hpp"

namespace matecensus {

namespace {

using detail::Arith;

// Diagonalizes `a` in place by unimodular row/column operations, always
// pivoting on an entry of least absolute value. Returns the nonzero diagonal
// (absolute values, not yet in divisibility order), or nullopt on overflow.
template <class T>
std::optional<std::vector<T>> smith_diagonal(std::vector<T> a, int n) {
  using Ar = Arith<T>;
  Ar::reset();
  auto at = [&](int i, int j) -> T& { return a[static_cast<std::size_t>(i) * n + j]; };
  auto swap_rows = [&](int r1, int r2, int from) {
    if (r1 == r2) return;
    for (int j = from; j < n; ++j) std::swap(at(r1, j), at(r2, j));
  };
  auto swap_cols = [&](int c1, int c2, int from) {
    if (c1 == c2) return;
    for (int i = from; i < n; ++i) std::swap(at(i, c1), at(i, c2));
  };

  std::vector<T> diagonal;
  for (int t = 0; t < n; ++t) {
    int pi = -1, pj = -1;
    T best(0);
    for (int i = t; i < n; ++i) {
      for (int j = t; j < n; ++j) {
        const T& x = at(i, j);
        if (sgn(x) == 0) continue;
        if (pi < 0 || abs(x) < best) {
          best = abs(x);
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;  // remaining block is zero
    swap_rows(t, pi, t);
    swap_cols(t, pj, t);

    for (;;) {
      const T pivot = at(t, t);
      for (int i = t + 1; i < n; ++i) {
        if (sgn(at(i, t)) == 0) continue;
        const T q = at(i, t) / pivot;
        for (int j = t; j < n; ++j) {
          if (sgn(at(t, j)) != 0) Ar::submul(at(i, j), q, at(t, j));
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (sgn(at(t, j)) == 0) continue;
        const T q = at(t, j) / pivot;
        for (int i = t; i < n; ++i) {
          if (sgn(at(i, t)) != 0) Ar::submul(at(i, j), q, at(i, t));
        }
      }
      if (Ar::failed()) return std::nullopt;

      // Remainders smaller than the pivot may survive; move the smallest
      // into the pivot position and go again.
      int ri = -1, rj = -1;
      T smallest(0);
      for (int i = t + 1; i < n; ++i) {
        if (sgn(at(i, t)) != 0 && (ri < 0 || abs(at(i, t)) < smallest)) {
          smallest = abs(at(i, t));
          ri = i;
          rj = t;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (sgn(at(t, j)) != 0 && (ri < 0 || abs(at(t, j)) < smallest)) {
          smallest = abs(at(t, j));
          ri = t;
          rj = j;
        }
      }
      if (ri < 0) break;
      swap_rows(t, ri, t);
      swap_cols(t, rj, t);
    }
    diagonal.push_back(abs(at(t, t)));
    if (Ar::failed()) return std::nullopt;
  }
  return diagonal;
}

template <class T>
std::optional<std::vector<mpz_class>> try_smith(const IntMatrix& m) {
  const int n = m.order();
  std::vector<T> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!Arith<T>::from(m.at(i, j), a[static_cast<std::size_t>(i) * n + j])) return std::nullopt;
    }
  }
  auto d = smith_diagonal(std::move(a), n);
  if (!d) return std::nullopt;
  std::vector<mpz_class> out;
  out.reserve(d->size());
  for (const T& x : *d) out.push_back(Arith<T>::to_mpz(x));
  return out;
}

// (d_i, d_j) -> (gcd, lcm) over all i < j yields the divisibility chain.
void fix_divisibility(std::vector<mpz_class>& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (mpz_divisible_p(d[j].get_mpz_t(), d[i].get_mpz_t())) continue;
      mpz_class g = gcd(d[i], d[j]);
      mpz_class l = d[i] / g * d[j];
      d[i] = std::move(g);
      d[j] = std::move(l);
    }
  }
}

}  // namespace

SnfResult snf(const IntMatrix& m, Arithmetic arithmetic) {
  std::optional<std::vector<mpz_class>> d;
  if (arithmetic == Arithmetic::Auto) {
    d = try_smith<detail::Checked64>(m);
    if (!d) d = try_smith<detail::Checked128>(m);
  }
  if (!d) d = try_smith<mpz_class>(m);
  fix_divisibility(*d);

  SnfResult result;
  result.order = m.order();
  result.rank = static_cast<int>(d->size());
  result.factors = std::move(*d);
  return result;
}

Cokernel cokernel_decomposition(const SnfResult& s) {
  Cokernel c;
  for (const auto& f : s.factors) {
    if (f > 1) c.torsion.push_back(f);
  }
  c.free_rank = s.order - s.rank;
  return c;
}

std::string SnfResult::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += ", ";
    out += factors[i].get_str();
  }
  out += ") rank " + std::to_string(rank);
  return out;
}

std::string Cokernel::to_string() const {
  std::string out;
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z_" + t.get_str();
  }
  if (free_rank > 0) {
    if (!out.empty()) out += " + ";
    out += "Z^" + std::to_string(free_rank);
  }
  return out.empty() ? "0" : out;
}

}  // namespace matecensus
