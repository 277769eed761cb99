#include "matecensus/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "matecensus/charpoly.hpp"
#include "matecensus/generate.hpp"
#include "matecensus/graph6.hpp"
#include "matecensus/invariant.hpp"
#include "matecensus/smith.hpp"

namespace matecensus {

namespace {

void record(VerifyCheck& check, bool passed, const std::string& context) {
  ++check.cases;
  if (passed) return;
  if (check.failures++ == 0) check.first_failure = context;
}

std::string where(const Graph& g, MatrixKind k) { return encode_graph6(g) + " " + std::string(name(k)); }

bool divisibility_chain(const SnfResult& s) {
  if (static_cast<int>(s.factors.size()) != s.rank || s.rank > s.order) return false;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    if (s.factors[i] <= 0) return false;
    if (i > 0 && !mpz_divisible_p(s.factors[i].get_mpz_t(), s.factors[i - 1].get_mpz_t())) return false;
  }
  return true;
}

}  // namespace

bool VerifyReport::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.ok(); });
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyCheck dual{"char-poly-dual"};
  VerifyCheck tiers{"arithmetic-tiers"};
  VerifyCheck chain{"snf-divisibility"};
  VerifyCheck det{"det-consistency"};
  VerifyCheck perm{"permutation-invariance"};
  VerifyCheck round_trip{"graph6-round-trip"};

  std::vector<Graph> corpus;
  for (int n = 1; n <= std::min(options.max_n, kMaxGeneratedOrder); ++n) {
    auto graphs = gen_connected_graphs(n);
    corpus.insert(corpus.end(), graphs.begin(), graphs.end());
  }

  for (const auto& g : corpus) {
    const int n = g.order();
    GraphMatrices matrices(g);
    for (int k = 0; k < kMatrixKindCount; ++k) {
      const auto kind = static_cast<MatrixKind>(k);
      const IntMatrix& m = matrices.get(kind);
      const CharPoly p = char_poly(m);
      bool agree = p.degree() == n;
      for (int t = 0; agree && t <= n; ++t) agree = p.evaluate(t) == char_poly_oracle(m, t);
      record(dual, agree, where(g, kind));

      const SnfResult s = snf(m);
      record(tiers, p == char_poly(m, Arithmetic::Bignum) && s == snf(m, Arithmetic::Bignum), where(g, kind));
      record(chain, divisibility_chain(s), where(g, kind));

      const mpz_class d = determinant(m);
      mpz_class product = 1;
      for (const auto& f : s.factors) product *= f;
      const mpz_class expected = s.rank == n ? product : mpz_class(0);
      const mpz_class constant = n % 2 == 0 ? p.coeffs.back() : mpz_class(-p.coeffs.back());
      record(det, abs(d) == expected && constant == d, where(g, kind));
    }
    record(round_trip, parse_graph6(encode_graph6(g)) == g, encode_graph6(g));
  }

  std::vector<InvariantKind> invariant_kinds;
  for (const auto& k : all_invariant_kinds()) {
    if (labeling_invariant(k)) invariant_kinds.push_back(k);
  }
  std::mt19937_64 rng(options.seed);
  for (int trial = 0; trial < options.permutation_trials && !corpus.empty(); ++trial) {
    const Graph& g = corpus[std::uniform_int_distribution<std::size_t>(0, corpus.size() - 1)(rng)];
    const InvariantKind k =
        invariant_kinds[std::uniform_int_distribution<std::size_t>(0, invariant_kinds.size() - 1)(rng)];
    std::vector<int> pi(static_cast<std::size_t>(g.order()));
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    record(perm, signature(g, k) == signature(g.relabeled(pi), k), encode_graph6(g) + " " + to_token(k));
  }

  return {{dual, tiers, chain, det, perm, round_trip}};
}

}  // namespace matecensus
