#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "matecensus/charpoly.hpp"
#include "matecensus/int_matrix.hpp"

namespace matecensus {

// Invariant factors f_1 | f_2 | ... | f_rank, all positive.
struct SnfResult {
  int order = 0;
  int rank = 0;
  std::vector<mpz_class> factors;

  std::string to_string() const;  // "(1, 3) rank 2"

  friend bool operator==(const SnfResult&, const SnfResult&) = default;
};

// Cokernel Z^n / im(M) = Z_{t_1} + ... + Z_{t_k} + Z^{free_rank} with t_i > 1.
struct Cokernel {
  std::vector<mpz_class> torsion;
  int free_rank = 0;

  std::string to_string() const;  // "Z_3 + Z^1", "0" for the trivial group

  friend bool operator==(const Cokernel&, const Cokernel&) = default;
};

SnfResult snf(const IntMatrix& m, Arithmetic arithmetic = Arithmetic::Auto);

Cokernel cokernel_decomposition(const SnfResult& s);

}  // namespace matecensus
