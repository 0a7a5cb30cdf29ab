#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace distlap {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  /// Edgeless graph. Throws std::invalid_argument if n < 1.
  explicit Graph(int n);

  /// Throws std::invalid_argument on self-loops, duplicates (either
  /// orientation) or out-of-range endpoints. Edges are canonicalised to u < v
  /// and sorted.
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  bool has_edge(int u, int v) const;
  bool is_complete() const noexcept;
  bool is_tree() const;

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  /// K_{1,n-1} centred on vertex 0.
  static Graph star(int n);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Header line `n [base]` (base 0 or 1, default 0), then one `u v` pair per
/// line. `#` starts a comment; blank lines are ignored. Throws ParseError.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list (0-based header).
std::string format_edge_list(const Graph& g);

/// BFS hop counts from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_connected(const Graph& g);

/// Shortest-path data of a connected graph. All entries are exact integers.
struct DistanceData {
  IntMatrix dist;      ///< d(v_i, v_j)
  IntVector tr;        ///< transmissions, row sums of dist
  std::int64_t wiener = 0;
  IntVector p;         ///< p_i = max_{j != i} d(v_i, v_j); 0 when n = 1
  IntVector sdd;       ///< second distance degrees, dist * tr

  Eigen::Index order() const noexcept { return dist.rows(); }
  std::int64_t min_transmission() const { return tr.minCoeff(); }
  std::int64_t max_transmission() const { return tr.maxCoeff(); }
};

/// BFS from every vertex. Throws DisconnectedGraph.
DistanceData compute_distance_data(const Graph& g);

/// k when every transmission equals k.
std::optional<std::int64_t> transmission_regularity(const DistanceData& dd);

}  // namespace distlap
