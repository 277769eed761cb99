#include "matecensus/graph6.hpp"

#include <string>

#include "matecensus/error.hpp"

namespace matecensus {

namespace {

constexpr int kOffset = 63;

[[noreturn]] void malformed(std::string_view line, const std::string& why) {
  throw Error(Errc::MalformedGraph6, "'" + std::string(line.substr(0, 40)) + "': " + why);
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  const std::string_view original = line;
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (line.ends_with('\n')) line.remove_suffix(1);
  if (line.empty()) malformed(original, "empty record");

  const int first = static_cast<unsigned char>(line[0]);
  if (first < kOffset || first > 126) malformed(original, "byte outside 63..126");
  if (first == 126) malformed(original, "n > 62 is not supported");
  const int n = first - kOffset;
  if (n < 1) malformed(original, "graph must have at least one vertex");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() != 1 + bytes) {
    malformed(original, "expected " + std::to_string(1 + bytes) + " bytes, got " +
                            std::to_string(line.size()));
  }

  for (std::size_t b = 1; b < line.size(); ++b) {
    const int c = static_cast<unsigned char>(line[b]);
    if (c < kOffset || c > 126) malformed(original, "byte outside 63..126");
  }
  const int pad = static_cast<int>(bytes * 6 - bits);
  if (bytes > 0 && ((line.back() - kOffset) & ((1 << pad) - 1)) != 0) {
    malformed(original, "nonzero padding bits");
  }

  // Bits run column-wise over the upper triangle: x(0,1), x(0,2), x(1,2), ...
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int chunk = line[1 + k / 6] - kOffset;
      if ((chunk >> (5 - k % 6)) & 1) {
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
      }
    }
  }
  return Graph(n, std::move(rows));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrder) throw Error(Errc::Unsupported, "graph6 short form needs n <= 62");
  std::string out;
  const std::size_t bits = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  out.reserve(1 + (bits + 5) / 6);
  out.push_back(static_cast<char>(n + kOffset));
  int chunk = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kOffset));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kOffset));
  return out;
}

std::size_t read_graph6_stream(std::istream& in,
                               const std::function<void(Graph, std::string)>& sink) {
  std::size_t count = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kGraph6Header) continue;
    std::string_view record = line;
    if (record.starts_with(kGraph6Header)) record.remove_prefix(kGraph6Header.size());
    Graph g = parse_graph6(record);
    sink(std::move(g), std::string(record));
    ++count;
  }
  return count;
}

}  // namespace matecensus
