#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "distlap/graph.hpp"

namespace distlap {

/// Decodes one graph6 string (no trailing newline). An optional ">>graph6<<"
/// prefix is accepted. Throws ParseError on bytes outside 63..126 or a bit
/// field of the wrong length.
Graph parse_graph6(std::string_view line);

std::string encode_graph6(const Graph& g);

/// Bit index of pair (i, j), i < j, in graph6 order: column-major upper triangle.
constexpr std::uint64_t graph6_bit_index(int i, int j) {
  return static_cast<std::uint64_t>(j) * (j - 1) / 2 + static_cast<std::uint64_t>(i);
}

}  // namespace distlap
