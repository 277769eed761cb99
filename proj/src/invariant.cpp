#include "matecensus/invariant.hpp"

#include <cctype>

#include "matecensus/error.hpp"
#include "matecensus/metric.hpp"

namespace matecensus {

namespace {

constexpr char kSpecTag = 'P';
constexpr char kSnfTag = 'S';

void put_u32(std::string& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((v >> shift) & 0xFF));
}

// sign byte, u32 magnitude length, big-endian magnitude
void put_int(std::string& out, const mpz_class& z) {
  out.push_back(sgn(z) < 0 ? 1 : 0);
  const std::size_t len = sgn(z) == 0 ? 0 : (mpz_sizeinbase(z.get_mpz_t(), 2) + 7) / 8;
  put_u32(out, static_cast<std::uint32_t>(len));
  const std::size_t at = out.size();
  out.resize(at + len);
  if (len > 0) {
    std::size_t written = 0;
    mpz_export(out.data() + at, &written, 1, 1, 1, 0, z.get_mpz_t());
  }
}

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  bool done() const noexcept { return pos_ == bytes_.size(); }

  char tag() { return static_cast<char>(take(1)[0]); }

  std::uint32_t u32() {
    const std::string_view b = take(4);
    std::uint32_t v = 0;
    for (char c : b) v = (v << 8) | static_cast<unsigned char>(c);
    return v;
  }

  mpz_class integer() {
    const char sign = tag();
    if (sign != 0 && sign != 1) bad("sign byte");
    const std::uint32_t len = u32();
    const std::string_view mag = take(len);
    mpz_class z = 0;
    if (len > 0) {
      if (mag[0] == 0) bad("non-minimal magnitude");
      mpz_import(z.get_mpz_t(), len, 1, 1, 1, 0, mag.data());
    } else if (sign == 1) {
      bad("negative zero");
    }
    return sign == 1 ? mpz_class(-z) : z;
  }

 private:
  std::string_view take(std::size_t n) {
    if (bytes_.size() - pos_ < n) bad("truncated key");
    const std::string_view out = bytes_.substr(pos_, n);
    pos_ += n;
    return out;
  }

  [[noreturn]] static void bad(const char* what) {
    throw Error(Errc::InvalidArgument, std::string("invalid parameter key: ") + what);
  }

  std::string_view bytes_;
  std::size_t pos_ = 0;
};

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

InvariantKind InvariantKind::from_index(int index) {
  if (index < 0 || index >= kInvariantKindCount) {
    throw Error(Errc::InvalidArgument, "invariant index out of range");
  }
  return {static_cast<Flavor>(index / kMatrixKindCount), static_cast<MatrixKind>(index % kMatrixKindCount)};
}

const std::vector<InvariantKind>& all_invariant_kinds() {
  static const std::vector<InvariantKind> kinds = [] {
    std::vector<InvariantKind> out;
    for (int i = 0; i < kInvariantKindCount; ++i) out.push_back(InvariantKind::from_index(i));
    return out;
  }();
  return kinds;
}

std::string to_token(InvariantKind k) {
  return std::string(k.flavor == Flavor::Spec ? "spec:" : "snf:") + std::string(name(k.matrix));
}

std::optional<InvariantKind> parse_invariant_kind(std::string_view token) {
  const auto colon = token.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const std::string_view flavor = token.substr(0, colon);
  InvariantKind k;
  if (iequals(flavor, "spec")) {
    k.flavor = Flavor::Spec;
  } else if (iequals(flavor, "snf")) {
    k.flavor = Flavor::Snf;
  } else {
    return std::nullopt;
  }
  const auto matrix = parse_matrix_kind(token.substr(colon + 1));
  if (!matrix) return std::nullopt;
  k.matrix = *matrix;
  return k;
}

std::string valid_tokens_help() {
  std::string out = "flavor:matrix with flavor in {spec, snf} and matrix in {";
  for (auto k : all_matrix_kinds()) {
    if (k != MatrixKind::A) out += ", ";
    out += name(k);
  }
  return out + "}";
}

ParamKey encode(const CharPoly& p) {
  ParamKey key;
  key.bytes.push_back(kSpecTag);
  put_u32(key.bytes, static_cast<std::uint32_t>(p.coeffs.size()));
  for (const auto& c : p.coeffs) put_int(key.bytes, c);
  return key;
}

ParamKey encode(const SnfResult& s) {
  ParamKey key;
  key.bytes.push_back(kSnfTag);
  put_u32(key.bytes, static_cast<std::uint32_t>(s.order));
  put_u32(key.bytes, static_cast<std::uint32_t>(s.rank));
  for (const auto& f : s.factors) put_int(key.bytes, f);
  return key;
}

void append(ParamKey& dst, const ParamKey& src) { dst.bytes += src.bytes; }

std::vector<InvariantValue> decode(const ParamKey& key) {
  std::vector<InvariantValue> out;
  Reader r(key.bytes);
  while (!r.done()) {
    const char tag = r.tag();
    if (tag == kSpecTag) {
      CharPoly p;
      const std::uint32_t count = r.u32();
      for (std::uint32_t i = 0; i < count; ++i) p.coeffs.push_back(r.integer());
      out.emplace_back(std::move(p));
    } else if (tag == kSnfTag) {
      SnfResult s;
      s.order = static_cast<int>(r.u32());
      s.rank = static_cast<int>(r.u32());
      for (int i = 0; i < s.rank; ++i) s.factors.push_back(r.integer());
      out.emplace_back(std::move(s));
    } else {
      throw Error(Errc::InvalidArgument, "invalid parameter key: unknown tag");
    }
  }
  return out;
}

std::vector<ParamKey> signatures(const Graph& g, std::span<const InvariantKind> kinds) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "signatures are defined for connected graphs only");
  GraphMatrices matrices(g);
  std::vector<ParamKey> out;
  out.reserve(kinds.size());
  for (const auto& k : kinds) {
    const IntMatrix& m = matrices.get(k.matrix);
    out.push_back(k.flavor == Flavor::Spec ? encode(char_poly(m)) : encode(snf(m)));
  }
  return out;
}

ParamKey signature(const Graph& g, InvariantKind k) {
  return std::move(signatures(g, std::span(&k, 1)).front());
}

ParamKey joint_signature(const Graph& g, const JointParam& p) {
  const InvariantKind kinds[] = {p.first, p.second};
  auto keys = signatures(g, kinds);
  append(keys[0], keys[1]);
  return std::move(keys[0]);
}

}  // namespace matecensus
