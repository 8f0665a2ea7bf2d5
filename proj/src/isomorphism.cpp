#include "mixspec/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <vector>

#include "mixspec/graph6.hpp"

namespace mixspec {

namespace {

using Cells = std::vector<VertexSet>;

// Splits the first cell that is not uniform with respect to some splitter cell.
// Sub-cells are ordered by ascending neighbor count, so the result only depends on
// the partition structure and never on vertex names.
bool split_once(const Graph& g, Cells& cells) {
  std::array<int, 64> count{};
  for (std::size_t s = 0; s < cells.size(); ++s) {
    const VertexSet splitter = cells[s];
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const VertexSet cell = cells[c];
      if (popcount(cell) <= 1) continue;
      int lo = 64;
      int hi = -1;
      for (VertexSet m = cell; m != 0; m &= m - 1) {
        const int v = std::countr_zero(m);
        count[v] = popcount(g.neighbors(v) & splitter);
        lo = std::min(lo, count[v]);
        hi = std::max(hi, count[v]);
      }
      if (lo == hi) continue;
      Cells parts;
      for (int k = lo; k <= hi; ++k) {
        VertexSet part = 0;
        for (VertexSet m = cell; m != 0; m &= m - 1) {
          const int v = std::countr_zero(m);
          if (count[v] == k) part |= bit(v);
        }
        if (part != 0) parts.push_back(part);
      }
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
      return true;
    }
  }
  return false;
}

void refine(const Graph& g, Cells& cells) {
  while (split_once(g, cells)) {
  }
}

bool twins(const Graph& g, int u, int v) {
  return (g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u));
}

struct Search {
  const Graph& g;
  std::vector<VertexSet> best;
  std::vector<VertexSet> scratch;
  bool have_best = false;

  void leaf(const Cells& cells) {
    std::array<int, 64> label{};
    for (std::size_t i = 0; i < cells.size(); ++i) label[std::countr_zero(cells[i])] = static_cast<int>(i);
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
      VertexSet row = 0;
      for (VertexSet m = g.neighbors(v); m != 0; m &= m - 1) row |= bit(label[std::countr_zero(m)]);
      scratch[static_cast<std::size_t>(label[v])] = row;
    }
    if (!have_best || std::lexicographical_compare(best.begin(), best.end(), scratch.begin(), scratch.end())) {
      best = scratch;
      have_best = true;
    }
  }

  void run(Cells cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](VertexSet c) { return popcount(c) > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto at = target - cells.begin();
    const VertexSet cell = *target;
    VertexSet tried = 0;
    for (VertexSet m = cell; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      bool redundant = false;
      for (VertexSet t = tried; t != 0 && !redundant; t &= t - 1) redundant = twins(g, std::countr_zero(t), v);
      if (redundant) continue;
      tried |= bit(v);
      Cells child = cells;
      child[static_cast<std::size_t>(at)] = bit(v);
      child.insert(child.begin() + at + 1, cell & ~bit(v));
      run(std::move(child));
    }
  }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  const int n = g.order();
  if (n == 0) return g;
  Search search{g, {}, std::vector<VertexSet>(static_cast<std::size_t>(n)), false};
  search.run(Cells{g.vertices()});
  Graph out(n);
  for (int u = 0; u < n; ++u) {
    for (VertexSet m = search.best[static_cast<std::size_t>(u)] & ~low_bits(u + 1); m != 0; m &= m - 1) {
      out.add_edge(u, std::countr_zero(m));
    }
  }
  return out;
}

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() == 0) return CanonicalForm{};
  return CanonicalForm{write_graph6(canonical_graph(g))};
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

std::optional<VertexSet> contains_induced(const Graph& host, const Graph& pattern) {
  const int n = host.order();
  const int k = pattern.order();
  if (k == 0) return VertexSet{0};
  if (k > n) return std::nullopt;

  const int pattern_edges = pattern.edge_count();
  std::vector<int> pattern_degrees(static_cast<std::size_t>(k));
  for (int v = 0; v < k; ++v) pattern_degrees[static_cast<std::size_t>(v)] = pattern.degree(v);
  std::sort(pattern_degrees.begin(), pattern_degrees.end());
  std::optional<CanonicalForm> pattern_key;

  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  std::vector<int> degrees(static_cast<std::size_t>(k));
  while (true) {
    const VertexSet s = to_set(pick);
    int twice = 0;
    for (int i = 0; i < k; ++i) {
      degrees[static_cast<std::size_t>(i)] = popcount(host.neighbors(pick[static_cast<std::size_t>(i)]) & s);
      twice += degrees[static_cast<std::size_t>(i)];
    }
    if (twice == 2 * pattern_edges) {
      std::sort(degrees.begin(), degrees.end());
      if (degrees == pattern_degrees) {
        if (!pattern_key) pattern_key = canonical_form(pattern);
        if (canonical_form(induced_subgraph(host, s)) == *pattern_key) return s;
      }
    }
    // next combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return std::nullopt;
}

}  // namespace mixspec
