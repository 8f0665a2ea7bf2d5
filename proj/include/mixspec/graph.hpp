#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mixspec {

/// Thrown when a graph-level precondition is violated (bad vertex, size overflow, ...).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using VertexSet = std::uint64_t;
using Edge = std::pair<int, int>;

inline constexpr int kMaxOrder = 62;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet low_bits(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
inline int popcount(VertexSet s) { return std::popcount(s); }

/// Simple undirected graph on vertices 0..n-1 stored as one neighbor bitmask per vertex.
///
/// The adjacency is always symmetric and loop-free; every mutating entry point checks this.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return static_cast<int>(rows_.size()); }
  VertexSet neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighbors(int v) const { return neighbors(v) | bit(v); }
  std::span<const VertexSet> rows() const { return rows_; }
  VertexSet vertices() const { return low_bits(order()); }

  bool adjacent(int u, int v) const { return (neighbors(u) >> v) & 1U; }
  int degree(int v) const { return popcount(neighbors(v)); }
  int edge_count() const;
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Graph with vertex i of `*this` renamed to perm[i].
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;
  std::vector<VertexSet> rows_;
};

Graph graph_from_edges(int n, std::span<const Edge> edges);

/// Subgraph induced on `subset`, vertices renumbered in ascending order.
Graph induced_subgraph(const Graph& g, VertexSet subset);
Graph induced_subgraph(const Graph& g, std::span<const int> subset);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

bool is_connected(const Graph& g);
/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
/// Bipartition (side containing vertex 0 of each component first) if one exists.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

VertexSet isolated_vertices(const Graph& g);
Graph without_isolated(const Graph& g);

std::vector<int> members(VertexSet s);
VertexSet to_set(std::span<const int> vertices);

}  // namespace mixspec
