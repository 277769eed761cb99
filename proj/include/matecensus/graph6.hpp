#pragma once

#include <functional>
#include <istream>
#include <string>
#include <string_view>

#include "matecensus/graph.hpp"

namespace matecensus {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

// Short-form graph6 only (1 <= n <= 62). The line may carry the header
// prefix and one trailing '\n'; anything else malformed throws
// Errc::MalformedGraph6, including nonzero padding bits.
Graph parse_graph6(std::string_view line);

// Header-less graph6 for n <= 62, no trailing newline.
std::string encode_graph6(const Graph& g);

// Calls `sink` once per record. Blank lines and a standalone header line are
// skipped. Returns the number of records delivered.
std::size_t read_graph6_stream(std::istream& in, const std::function<void(Graph, std::string)>& sink);

}  // namespace matecensus
