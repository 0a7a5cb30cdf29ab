#include "distlap/graph6.hpp"

#include <vector>

#include "distlap/errors.hpp"

namespace distlap {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int byte_value(char c) {
  int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126)
    throw ParseError("graph6 byte " + std::to_string(v) + " outside 63..126");
  return v - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 string");
  if (line.front() == ':' || line.front() == ';' || line.front() == '&')
    throw ParseError("sparse6/digraph6 input is not supported");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > line.size()) throw ParseError("truncated graph6 order field");
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < count; ++k) v = (v << 6) | static_cast<std::uint64_t>(byte_value(line[pos + k]));
    pos += count;
    return v;
  };
  if (byte_value(line[0]) < 63) {
    n = take(1);
  } else if (line.size() >= 2 && byte_value(line[1]) < 63) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n == 0) throw ParseError("graph6 order 0 is not a valid graph here");
  if (n > (1u << 16)) throw ParseError("graph6 order too large");

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes)
    throw ParseError("graph6 bit field has " + std::to_string(line.size() - pos) +
                     " bytes, expected " + std::to_string(bytes));

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      int chunk = byte_value(line[pos + k / 6]);
      if ((chunk >> (5 - k % 6)) & 1) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((byte_value(line[pos + k / 6]) >> (5 - k % 6)) & 1)
      throw ParseError("nonzero graph6 padding bits");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  } else {
    out.append(2, static_cast<char>(126));
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  }
  const std::uint64_t bits = n * (n - 1) / 2;
  std::vector<unsigned char> field((bits + 5) / 6, 0);
  for (const auto& e : g.edges()) {
    auto k = graph6_bit_index(e.u, e.v);
    field[k / 6] |= static_cast<unsigned char>(1u << (5 - k % 6));
  }
  for (auto b : field) out.push_back(static_cast<char>(b + kBias));
  return out;
}

}  // namespace distlap
