#include "distlap/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <string>

#include "distlap/errors.hpp"

namespace distlap {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw std::invalid_argument("graph order must be positive");
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + "-" +
                                std::to_string(dup->v));
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

bool Graph::is_complete() const noexcept {
  return edges_.size() == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
}

bool Graph::is_tree() const {
  return edges_.size() + 1 == static_cast<std::size_t>(n_) && is_connected(*this);
}

Graph Graph::complete(int n) {
  std::vector<Edge> e;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) e.push_back({i, j});
  return Graph(n, std::move(e));
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  auto e = path(n).edges();
  e.push_back({0, n - 1});
  return Graph(n, std::move(e));
}

Graph Graph::star(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({0, i});
  return Graph(n, std::move(e));
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ','))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !(line[j] == ' ' || line[j] == '\t' || line[j] == '\r' || line[j] == ','))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long to_integer(std::string_view tok, std::size_t line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("expected integer, got '" + std::string(tok) + "'", line);
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<long> order;
  long base = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokens(line);
    if (tok.empty()) continue;

    if (!order) {
      if (tok.size() > 2) throw ParseError("header must be 'n [base]'", line_no);
      order = to_integer(tok[0], line_no);
      if (*order < 1) throw ParseError("vertex count must be positive", line_no);
      if (tok.size() == 2) {
        base = to_integer(tok[1], line_no);
        if (base != 0 && base != 1) throw ParseError("index base must be 0 or 1", line_no);
      }
      continue;
    }
    if (tok.size() != 2) throw ParseError("expected 'u v'", line_no);
    long u = to_integer(tok[0], line_no) - base;
    long v = to_integer(tok[1], line_no) - base;
    if (u < 0 || v < 0 || u >= *order || v >= *order)
      throw ParseError("vertex index out of range", line_no);
    if (u == v) throw ParseError("self-loop", line_no);
    Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it != edges.end())
      throw ParseError("duplicate edge (first seen on line " +
                           std::to_string(edge_lines[it - edges.begin()]) + ")",
                       line_no);
    edges.push_back(e);
    edge_lines.push_back(line_no);
  }
  if (!order) throw ParseError("missing vertex count header");
  return Graph(static_cast<int>(*order), std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << " 0\n";
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

DistanceData compute_distance_data(const Graph& g) {
  const Eigen::Index n = g.order();
  DistanceData dd;
  dd.dist.resize(n, n);
  for (Eigen::Index s = 0; s < n; ++s) {
    auto d = bfs_distances(g, static_cast<int>(s));
    for (Eigen::Index t = 0; t < n; ++t) {
      if (d[t] < 0) throw DisconnectedGraph("graph is disconnected; distances are undefined");
      dd.dist(s, t) = d[t];
    }
  }
  dd.tr = dd.dist.rowwise().sum();
  dd.wiener = dd.tr.sum() / 2;
  dd.p = n > 1 ? IntVector(dd.dist.rowwise().maxCoeff()) : IntVector::Zero(1);
  dd.sdd = dd.dist * dd.tr;
  return dd;
}

std::optional<std::int64_t> transmission_regularity(const DistanceData& dd) {
  if (dd.tr.size() == 0 || dd.tr.minCoeff() != dd.tr.maxCoeff()) return std::nullopt;
  return dd.tr(0);
}

}  // namespace distlap
