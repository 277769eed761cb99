#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <numeric>

namespace matecensus::detail {

// Fixed-width integer whose arithmetic raises a sticky per-thread flag on
// overflow instead of wrapping. Kernels run on Checked<int64_t> and
// Checked<__int128> first and fall back to mpz_class when the flag trips.
template <class I>
struct Checked {
  I v{};

  constexpr Checked() = default;
  constexpr Checked(I x) : v(x) {}  // NOLINT(google-explicit-constructor)

  static bool& overflowed() noexcept {
    static thread_local bool flag = false;
    return flag;
  }

  static Checked trip() noexcept {
    overflowed() = true;
    return Checked{};
  }

  friend Checked operator+(Checked a, Checked b) noexcept {
    I r;
    return __builtin_add_overflow(a.v, b.v, &r) ? trip() : Checked(r);
  }
  friend Checked operator-(Checked a, Checked b) noexcept {
    I r;
    return __builtin_sub_overflow(a.v, b.v, &r) ? trip() : Checked(r);
  }
  friend Checked operator*(Checked a, Checked b) noexcept {
    I r;
    return __builtin_mul_overflow(a.v, b.v, &r) ? trip() : Checked(r);
  }
  friend Checked operator-(Checked a) noexcept {
    return a.v == std::numeric_limits<I>::min() ? trip() : Checked(-a.v);
  }
  // truncating, like mpz_class
  friend Checked operator/(Checked a, Checked b) noexcept {
    if (b.v == 0 || (a.v == std::numeric_limits<I>::min() && b.v == -1)) return trip();
    return Checked(a.v / b.v);
  }
  friend Checked operator%(Checked a, Checked b) noexcept {
    if (b.v == 0 || (a.v == std::numeric_limits<I>::min() && b.v == -1)) return trip();
    return Checked(a.v % b.v);
  }
  Checked& operator+=(Checked b) noexcept { return *this = *this + b; }
  Checked& operator-=(Checked b) noexcept { return *this = *this - b; }

  friend bool operator==(Checked a, Checked b) noexcept { return a.v == b.v; }
  friend bool operator<(Checked a, Checked b) noexcept { return a.v < b.v; }

  friend int sgn(Checked a) noexcept { return (a.v > 0) - (a.v < 0); }
  friend Checked abs(Checked a) noexcept { return a.v < 0 ? -a : a; }
};

using Checked64 = Checked<std::int64_t>;
using Checked128 = Checked<__int128>;

template <class T>
struct Arith;

template <class I>
struct Arith<Checked<I>> {
  using T = Checked<I>;
  static void reset() noexcept { T::overflowed() = false; }
  static bool failed() noexcept { return T::overflowed(); }
  static void addmul(T& acc, const T& x, const T& y) noexcept { acc = acc + x * y; }
  static void submul(T& acc, const T& x, const T& y) noexcept { acc = acc - x * y; }

  static bool from(const mpz_class& z, T& out) {
    if constexpr (sizeof(I) <= sizeof(long)) {
      if (!z.fits_slong_p()) return false;
      out = T(static_cast<I>(z.get_si()));
      return true;
    } else {
      // |z| < 2^126 keeps every later overflow check meaningful
      if (mpz_sizeinbase(z.get_mpz_t(), 2) > 126) return false;
      mpz_class mag = abs(z);
      const std::uint64_t lo = mpz_get_ui(mpz_class(mag & mpz_class(~0UL)).get_mpz_t());
      const std::uint64_t hi = mpz_get_ui(mpz_class(mag >> 64).get_mpz_t());
      I v = static_cast<I>((static_cast<unsigned __int128>(hi) << 64) | lo);
      out = T(sgn(z) < 0 ? -v : v);
      return true;
    }
  }

  static mpz_class to_mpz(const T& x) {
    if constexpr (sizeof(I) <= sizeof(long)) {
      return mpz_class(static_cast<long>(x.v));
    } else {
      const bool neg = x.v < 0;
      unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(x.v) : static_cast<unsigned __int128>(x.v);
      mpz_class out(static_cast<unsigned long>(mag >> 64));
      out <<= 64;
      out += static_cast<unsigned long>(mag & ~std::uint64_t{0});
      return neg ? mpz_class(-out) : out;
    }
  }
};

template <>
struct Arith<mpz_class> {
  using T = mpz_class;
  static void reset() noexcept {}
  static bool failed() noexcept { return false; }
  static void addmul(T& acc, const T& x, const T& y) {
    mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  }
  static void submul(T& acc, const T& x, const T& y) {
    mpz_submul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  }
  static bool from(const mpz_class& z, T& out) {
    out = z;
    return true;
  }
  static mpz_class to_mpz(const T& x) { return x; }
};

}  // namespace matecensus::detail
