#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "matecensus/int_matrix.hpp"

namespace matecensus {

// det(xI - M) as coefficients from degree n down to degree 0; coeffs[0] == 1.
struct CharPoly {
  std::vector<mpz_class> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  mpz_class evaluate(const mpz_class& x) const;
  std::string to_string() const;  // "x^3 - 3x - 2"

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

enum class Arithmetic {
  Auto,    // 64-bit, then 128-bit, then bignum on overflow
  Bignum,  // bignum only
};

// Faddeev-LeVerrier. Every internal division by k is checked to be exact;
// a remainder throws Errc::InternalDivisionInexact.
CharPoly char_poly(const IntMatrix& m, Arithmetic arithmetic = Arithmetic::Auto);

// det(tI - M) by fraction-free Bareiss elimination, for cross-checking.
mpz_class char_poly_oracle(const IntMatrix& m, const mpz_class& t);

// Bareiss determinant of an arbitrary square matrix.
mpz_class determinant(IntMatrix m);

}  // namespace matecensus
