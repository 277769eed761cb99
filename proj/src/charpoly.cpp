#include "matecensus/charpoly.hpp"

#include <optional>

#include "checked_int.hpp"
#include "matecensus/error.hpp"

namespace matecensus {

namespace {

using detail::Arith;

template <class T>
std::optional<std::vector<T>> load(const IntMatrix& m) {
  const int n = m.order();
  std::vector<T> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!Arith<T>::from(m.at(i, j), out[static_cast<std::size_t>(i) * n + j])) return std::nullopt;
    }
  }
  return out;
}

// c[k] is the coefficient of x^(n-k). M_1 = I, M_k = A M_{k-1} + c[k-1] I,
// c[k] = -tr(A M_k) / k. Returns nullopt when fixed-width arithmetic overflows.
template <class T>
std::optional<std::vector<T>> faddeev_leverrier(const std::vector<T>& a, int n) {
  using Ar = Arith<T>;
  Ar::reset();
  std::vector<T> c(static_cast<std::size_t>(n) + 1);
  c[0] = T(1);
  std::vector<T> m(static_cast<std::size_t>(n) * n, T(0));
  std::vector<T> am(m.size());
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = T(1);

  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        T acc(0);
        for (int l = 0; l < n; ++l) {
          const T& x = a[static_cast<std::size_t>(i) * n + l];
          if (sgn(x) != 0) Ar::addmul(acc, x, m[static_cast<std::size_t>(l) * n + j]);
        }
        am[static_cast<std::size_t>(i) * n + j] = acc;
      }
    }
    T trace(0);
    for (int i = 0; i < n; ++i) trace += am[static_cast<std::size_t>(i) * n + i];
    if (Ar::failed()) return std::nullopt;

    const T divisor(k);
    if (sgn(T(trace % divisor)) != 0) {
      throw Error(Errc::InternalDivisionInexact,
                  "trace not divisible by " + std::to_string(k) + " in Faddeev-LeVerrier");
    }
    c[k] = -(trace / divisor);
    if (k < n) {
      m.swap(am);
      for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] += c[k];
    }
    if (Ar::failed()) return std::nullopt;
  }
  return c;
}

template <class T>
std::optional<CharPoly> try_char_poly(const IntMatrix& m) {
  auto a = load<T>(m);
  if (!a) return std::nullopt;
  auto c = faddeev_leverrier(*a, m.order());
  if (!c) return std::nullopt;
  CharPoly p;
  p.coeffs.reserve(c->size());
  for (const T& x : *c) p.coeffs.push_back(Arith<T>::to_mpz(x));
  return p;
}

}  // namespace

CharPoly char_poly(const IntMatrix& m, Arithmetic arithmetic) {
  if (arithmetic == Arithmetic::Auto) {
    if (auto p = try_char_poly<detail::Checked64>(m)) return *p;
    if (auto p = try_char_poly<detail::Checked128>(m)) return *p;
  }
  return *try_char_poly<mpz_class>(m);
}

mpz_class determinant(IntMatrix m) {
  const int n = m.order();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (sgn(m.at(k, k)) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (sgn(m.at(i, k)) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = std::move(v);
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

mpz_class char_poly_oracle(const IntMatrix& m, const mpz_class& t) {
  const int n = m.order();
  IntMatrix shifted(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) shifted.at(i, j) = (i == j ? t : mpz_class(0)) - m.at(i, j);
  }
  return determinant(std::move(shifted));
}

mpz_class CharPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (const auto& c : coeffs) acc = acc * x + c;
  return acc;
}

std::string CharPoly::to_string() const {
  std::string out;
  const int n = degree();
  for (int k = 0; k <= n; ++k) {
    const mpz_class& c = coeffs[k];
    if (sgn(c) == 0) continue;
    const int power = n - k;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mag != 1 || power == 0) out += mag.get_str();
    if (power >= 1) out += "x";
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out.empty() ? "0" : out;
}

}  // namespace matecensus
