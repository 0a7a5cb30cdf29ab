#include "distlap/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "distlap/graph6.hpp"

namespace distlap {
namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::out_of_range("built-in enumeration supports 1 <= n <= " +
                            std::to_string(kMaxEnumerationOrder) + " (got " + std::to_string(n) +
                            "); feed larger graphs as graph6 input");
}

using AdjacencyRows = std::array<std::uint32_t, kMaxEnumerationOrder>;

AdjacencyRows rows_of(int n, std::uint64_t mask) {
  AdjacencyRows rows{};
  std::uint64_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1) {
        rows[i] |= 1u << j;
        rows[j] |= 1u << i;
      }
  return rows;
}

bool rows_connected(int n, const AdjacencyRows& rows) {
  const std::uint32_t all = (1u << n) - 1;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

std::uint64_t canonical_from_rows(int n, const AdjacencyRows& rows) {
  std::array<int, kMaxEnumerationOrder> degree{};
  for (int v = 0; v < n; ++v) degree[v] = std::popcount(rows[v]);
  // perm[new] = old, restricted to orders that are nondecreasing in degree
  std::array<int, kMaxEnumerationOrder> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  auto by_degree = [&](int a, int b) { return degree[a] != degree[b] ? degree[a] < degree[b] : a < b; };
  std::sort(perm.begin(), perm.begin() + n, by_degree);

  std::array<int, kMaxEnumerationOrder + 1> block_start{};
  int blocks = 0;
  for (int v = 0; v < n; ++v)
    if (v == 0 || degree[perm[v]] != degree[perm[v - 1]]) block_start[blocks++] = v;
  block_start[blocks] = n;

  std::uint64_t best = ~std::uint64_t{0};
  // odometer over permutations inside each degree block
  while (true) {
    std::uint64_t mask = 0, k = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if ((rows[perm[i]] >> perm[j]) & 1) mask |= std::uint64_t{1} << k;
    best = std::min(best, mask);

    int b = blocks - 1;
    for (; b >= 0; --b) {
      auto first = perm.begin() + block_start[b];
      auto last = perm.begin() + block_start[b + 1];
      if (std::next_permutation(first, last, by_degree)) break;
    }
    if (b < 0) break;
  }
  return best;
}

}  // namespace

std::uint64_t edge_subset_count(int n) {
  check_order(n);
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

std::uint64_t mask_of(const Graph& g) {
  check_order(g.order());
  std::uint64_t mask = 0;
  for (const auto& e : g.edges()) mask |= std::uint64_t{1} << graph6_bit_index(e.u, e.v);
  return mask;
}

std::uint64_t canonical_mask(const Graph& g) {
  return canonical_from_rows(g.order(), rows_of(g.order(), mask_of(g)));
}

void enumerate_connected(int n, std::uint64_t first, std::uint64_t last, bool dedup,
                         const GraphVisitor& visit) {
  last = std::min(last, edge_subset_count(n));
  for (std::uint64_t mask = first; mask < last; ++mask) {
    auto rows = rows_of(n, mask);
    if (!rows_connected(n, rows)) continue;
    if (dedup && canonical_from_rows(n, rows) != mask) continue;
    visit(graph_from_mask(n, mask));
  }
}

void enumerate_connected(int n, bool dedup, const GraphVisitor& visit) {
  enumerate_connected(n, 0, edge_subset_count(n), dedup, visit);
}

std::vector<Graph> connected_graphs(int n, bool dedup) {
  std::vector<Graph> out;
  enumerate_connected(n, dedup, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace distlap
