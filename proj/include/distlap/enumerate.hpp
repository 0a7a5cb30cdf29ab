#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "distlap/graph.hpp"

namespace distlap {

/// Largest order the built-in enumerator accepts; larger graphs come from graph6 input.
inline constexpr int kMaxEnumerationOrder = 7;

/// Edge subsets of K_n are indexed by bitmasks in graph6 bit order.
std::uint64_t edge_subset_count(int n);
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_of(const Graph& g);

/// Smallest mask over all relabellings that list vertices by nondecreasing
/// degree. Equal for isomorphic graphs, and is itself the mask of a member of
/// the class. Requires order <= kMaxEnumerationOrder.
std::uint64_t canonical_mask(const Graph& g);

using GraphVisitor = std::function<void(const Graph&)>;

/// Visits every connected graph on n labelled vertices whose mask lies in
/// [first, last), in increasing mask order. With `dedup`, only the canonical
/// representative of each isomorphism class is visited. Throws
/// std::out_of_range when n is outside [1, kMaxEnumerationOrder].
void enumerate_connected(int n, std::uint64_t first, std::uint64_t last, bool dedup,
                         const GraphVisitor& visit);

/// Whole mask range.
void enumerate_connected(int n, bool dedup, const GraphVisitor& visit);

std::vector<Graph> connected_graphs(int n, bool dedup = false);

}  // namespace distlap
