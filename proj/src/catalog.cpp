#include "mixspec/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>
#include <numeric>

namespace mixspec {

namespace {

Graph from_list(int n, std::initializer_list<Edge> edges) {
  return graph_from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// Vertex numbering follows the drawn coordinates, see forbidden_catalog().
std::vector<ForbiddenEntry> build_forbidden() {
  using enum Obstruction;
  std::vector<ForbiddenEntry> out;
  out.push_back({"C5", named_graph("cycle", std::array{5}), kTwoBelowMinusOne});
  out.push_back({"P6", named_graph("path", std::array{6}), kTwoBelowMinusOne});
  // G1..G5: 0 top-left, 1 top-right, 2 center, 3 bottom-left, 4 bottom-right.
  out.push_back({"G1", from_list(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}}), kTwoBelowMinusOne});
  out.push_back({"G2", from_list(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {3, 4}}), kTwoBelowMinusOne});
  out.push_back({"G3", from_list(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {2, 3}, {2, 4}}), kTwoBelowMinusOne});
  out.push_back(
      {"G4", from_list(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {2, 3}, {2, 4}, {1, 4}}), kTwoBelowMinusOne});
  out.push_back(
      {"G5", from_list(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {2, 3}, {2, 4}, {1, 4}, {3, 4}}), kTwoBelowMinusOne});
  // G6, G7: bottom row 0,1,2 and top row 3,4,5, left to right.
  out.push_back({"G6", from_list(6, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {1, 5}, {2, 5}}), kThreePositive});
  out.push_back({"G7",
                 from_list(6, {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}}),
                 kThreePositive});
  // G8..G13: the horizontal spine is 0,1,2,3 left to right; 4 and 5 are the off-axis vertices.
  out.push_back(
      {"G8", from_list(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {1, 5}, {3, 4}, {3, 5}, {2, 4}}), kThreePositive});
  out.push_back({"G9", from_list(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}}), kThreePositive});
  out.push_back({"G10", from_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}), kTwoBelowMinusOne});
  out.push_back({"G11", from_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 5}, {5, 4}, {4, 2}}), kTwoBelowMinusOne});
  out.push_back({"G12", from_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}), kThreePositive});
  out.push_back({"G13", from_list(6, {{0, 1}, {1, 2}, {1, 4}, {2, 4}, {3, 2}, {3, 4}, {3, 5}}), kThreePositive});
  return out;
}

void require(bool ok, std::string_view name) {
  if (!ok) throw GraphError("invalid parameters for named graph '" + std::string(name) + "'");
}

Graph complete_multipartite(std::span<const int> parts) {
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw GraphError("complete multipartite part sizes must be positive");
    n += p;
  }
  if (n < 1 || n > kMaxOrder) throw GraphError("complete multipartite order out of range");
  Graph g(n);
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) g.add_edge(u, v);
    }
  }
  return g;
}

std::optional<std::vector<int>> parse_int_list(std::string_view text) {
  std::vector<int> out;
  while (true) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || value < 1) return std::nullopt;
    out.push_back(value);
    text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
    if (text.empty()) return out;
    if (text.front() != ',') return std::nullopt;
    text.remove_prefix(1);
  }
}

}  // namespace

const std::vector<ForbiddenEntry>& forbidden_catalog() {
  static const std::vector<ForbiddenEntry> catalog = build_forbidden();
  return catalog;
}

Graph named_graph(std::string_view name, std::span<const int> params) {
  auto arg = [&](std::size_t i) { return params[i]; };
  if (name == "complete" || name == "empty" || name == "path" || name == "cycle" || name == "star") {
    require(params.size() == 1, name);
    const int m = arg(0);
    if (name == "star") {
      require(m >= 1, name);
      return complete_multipartite(std::array{1, m});
    }
    require(m >= (name == "cycle" ? 3 : 1) && m <= kMaxOrder, name);
    Graph g(m);
    if (name == "complete") {
      for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    } else if (name == "path" || name == "cycle") {
      for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
      if (name == "cycle") g.add_edge(m - 1, 0);
    }
    return g;
  }
  if (name == "complete_bipartite") {
    require(params.size() == 2 && arg(0) >= 1 && arg(1) >= 1, name);
    return complete_multipartite(params);
  }
  if (name == "complete_multipartite") {
    require(!params.empty(), name);
    return complete_multipartite(params);
  }
  if (name == "pineapple") {
    require(params.size() == 2 && arg(0) >= 1 && arg(1) >= 1, name);
    const int p = arg(0);
    const int q = arg(1);
    require(p + 1 + q <= kMaxOrder, name);
    Graph g(p + 1 + q);
    for (int u = 0; u <= p; ++u)
      for (int v = u + 1; v <= p; ++v) g.add_edge(u, v);
    for (int v = p + 1; v <= p + q; ++v) g.add_edge(p, v);
    return g;
  }
  if (name == "complete_split") {
    require(params.size() == 2 && arg(0) >= 1 && arg(1) >= 1, name);
    const int p = arg(0);
    const int q = arg(1);
    require(p + q <= kMaxOrder, name);
    Graph g(p + q);
    for (int u = 0; u < p + q; ++u) {
      for (int v = std::max(u + 1, p); v < p + q; ++v) g.add_edge(u, v);
    }
    return g;
  }
  std::string_view fixed = name;
  if (name == "bull") fixed = "G1";
  if (name == "house") fixed = "G2";
  if (name == "gem") fixed = "G4";
  if (name == "wheel4") fixed = "G5";
  for (const auto& entry : forbidden_catalog()) {
    if (entry.name == fixed) {
      require(params.empty(), name);
      return entry.graph;
    }
  }
  throw GraphError("unknown named graph '" + std::string(name) + "'");
}

bool parse_named_graph(std::string_view text, Graph& out) {
  for (const auto& entry : forbidden_catalog()) {
    if (entry.name == text) {
      out = entry.graph;
      return true;
    }
  }
  if (text == "bull" || text == "house" || text == "gem" || text == "wheel4") {
    out = named_graph(text);
    return true;
  }
  if (text.size() < 2) return false;
  const char kind = text.front();
  auto values = parse_int_list(text.substr(1));
  if (!values) return false;
  if (kind == 'K' && values->size() >= 2) {
    out = complete_multipartite(*values);
    return true;
  }
  if (values->size() != 1) return false;
  const std::array<int, 1> m{(*values)[0]};
  switch (kind) {
    case 'K': out = named_graph("complete", m); return true;
    case 'P': out = named_graph("path", m); return true;
    case 'C': out = named_graph("cycle", m); return true;
    case 'E': out = named_graph("empty", m); return true;
    case 'S': out = named_graph("star", m); return true;
    default: return false;
  }
}

}  // namespace mixspec
