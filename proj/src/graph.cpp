#include "mixspec/graph.hpp"

#include <algorithm>
#include <string>

namespace mixspec {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw GraphError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxOrder));
  }
  rows_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet row : rows_) twice += popcount(row);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (VertexSet s = neighbors(u) & ~low_bits(u + 1); s != 0; s &= s - 1) {
      out.emplace_back(u, std::countr_zero(s));
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  rows_[static_cast<std::size_t>(u)] |= bit(v);
  rows_[static_cast<std::size_t>(v)] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[static_cast<std::size_t>(u)] &= ~bit(v);
  rows_[static_cast<std::size_t>(v)] &= ~bit(u);
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order()) throw GraphError("permutation length mismatch");
  Graph out(order());
  for (int u = 0; u < order(); ++u) {
    VertexSet row = 0;
    for (VertexSet s = neighbors(u); s != 0; s &= s - 1) row |= bit(perm[std::countr_zero(s)]);
    out.rows_[static_cast<std::size_t>(perm[u])] = row;
  }
  return out;
}

Graph graph_from_edges(int n, std::span<const Edge> edges) {
  if (n < 1 || n > kMaxOrder) {
    throw GraphError("graph order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder));
  }
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph induced_subgraph(const Graph& g, VertexSet subset) {
  if (subset == 0) throw GraphError("induced subgraph of an empty vertex set");
  if ((subset & ~g.vertices()) != 0) throw GraphError("induced subgraph vertex out of range");
  std::vector<int> vs = members(subset);
  Graph out(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(vs[i], vs[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> subset) {
  return induced_subgraph(g, to_set(subset));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxOrder) throw GraphError("disjoint union exceeds " + std::to_string(kMaxOrder) + " vertices");
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + g.order(), v + g.order());
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (unseen != 0) {
    VertexSet comp = bit(std::countr_zero(unseen));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet s = frontier; s != 0; s &= s - 1) next |= g.neighbors(std::countr_zero(s));
      frontier = next & ~comp;
      comp |= frontier;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  VertexSet left = 0;
  VertexSet right = 0;
  for (VertexSet comp : components(g)) {
    VertexSet side[2] = {bit(std::countr_zero(comp)), 0};
    VertexSet frontier = side[0];
    int parity = 0;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet s = frontier; s != 0; s &= s - 1) next |= g.neighbors(std::countr_zero(s));
      if ((next & side[parity]) != 0) return std::nullopt;
      parity ^= 1;
      frontier = next & ~side[parity];
      side[parity] |= next;
      if ((side[0] & side[1]) != 0) return std::nullopt;
    }
    left |= side[0];
    right |= side[1];
  }
  return std::make_pair(left, right);
}

VertexSet isolated_vertices(const Graph& g) {
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbors(v) == 0) out |= bit(v);
  }
  return out;
}

Graph without_isolated(const Graph& g) {
  VertexSet keep = g.vertices() & ~isolated_vertices(g);
  if (keep == 0) return Graph{};
  return induced_subgraph(g, keep);
}

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  for (; s != 0; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

VertexSet to_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxOrder) throw GraphError("vertex " + std::to_string(v) + " out of range");
    s |= bit(v);
  }
  return s;
}

}  // namespace mixspec
