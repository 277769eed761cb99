#include "matecensus/source.hpp"

#include <charconv>
#include <fstream>

#include "matecensus/error.hpp"
#include "matecensus/generate.hpp"
#include "matecensus/graph6.hpp"

namespace matecensus {

void VectorSource::for_each_chunk(std::size_t chunk_size, const ChunkVisitor& visit) const {
  const std::span<const Graph> all(graphs_);
  for (std::size_t at = 0; at < all.size(); at += chunk_size) {
    visit(all.subspan(at, std::min(chunk_size, all.size() - at)));
  }
}

void FileSource::for_each_chunk(std::size_t chunk_size, const ChunkVisitor& visit) const {
  std::ifstream in(path_);
  if (!in) throw Error(Errc::Io, "cannot open " + path_);
  std::vector<Graph> chunk;
  chunk.reserve(chunk_size);
  read_graph6_stream(in, [&](Graph g, const std::string&) {
    chunk.push_back(std::move(g));
    if (chunk.size() == chunk_size) {
      visit(chunk);
      chunk.clear();
    }
  });
  if (!chunk.empty()) visit(chunk);
}

void TreeSource::for_each_chunk(std::size_t chunk_size, const ChunkVisitor& visit) const {
  std::vector<Graph> chunk;
  chunk.reserve(chunk_size);
  for_each_tree(n_, [&](const Graph& g) {
    chunk.push_back(g);
    if (chunk.size() == chunk_size) {
      visit(chunk);
      chunk.clear();
    }
  });
  if (!chunk.empty()) visit(chunk);
}

std::unique_ptr<GraphSource> make_generator_source(const std::string& spec, int workers) {
  const auto colon = spec.find(':');
  int n = 0;
  if (colon != std::string::npos) {
    const char* first = spec.data() + colon + 1;
    const char* last = spec.data() + spec.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || ptr != last) n = 0;
  }
  const std::string family = colon == std::string::npos ? spec : spec.substr(0, colon);
  if (n < 1) throw Error(Errc::InvalidArgument, "generator spec must look like graphs:N or trees:N");
  if (family == "graphs") {
    return std::make_unique<VectorSource>(gen_connected_graphs(n, workers), spec);
  }
  if (family == "trees") {
    FreeTreeGenerator check(n);  // validates the order up front
    return std::make_unique<TreeSource>(n);
  }
  throw Error(Errc::InvalidArgument, "unknown generator family '" + family + "'");
}

}  // namespace matecensus
