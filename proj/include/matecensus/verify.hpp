#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace matecensus {

struct VerifyOptions {
  int max_n = 6;                // connected graphs of order 1..max_n
  int permutation_trials = 100;
  std::uint64_t seed = 1;
};

struct VerifyCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure{};

  bool ok() const noexcept { return failures == 0 && cases > 0; }
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool ok() const noexcept;
};

// Cross-algorithm oracle suite over every connected graph up to max_n and
// every matrix kind:
//   char-poly-dual        Faddeev-LeVerrier vs det(tI - M) at t = 0..n
//   arithmetic-tiers      machine-word kernels vs bignum-only kernels
//   snf-divisibility      positive factors, f_i | f_{i+1}
//   det-consistency       |det M| = product of factors at full rank, else 0
//   permutation-invariance  random relabelings, labeling-invariant kinds only
//   graph6-round-trip     encode then parse returns the same graph
VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace matecensus
