#include "mixspec/enumerate.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "mixspec/graph6.hpp"
#include "mixspec/parallel.hpp"

namespace mixspec {

namespace {

void check_order(int n, int lo) {
  if (n < lo || n > kMaxEnumerationOrder) {
    throw GraphError("enumeration order " + std::to_string(n) + " outside " + std::to_string(lo) + ".." +
                     std::to_string(kMaxEnumerationOrder));
  }
}

GenerationLevel single_vertex() {
  GenerationLevel level;
  level.order = 1;
  level.graphs.emplace_back(1);
  level.keys.push_back(canonical_form(level.graphs.back()));
  return level;
}

GenerationLevel from_sorted_keys(int order, std::vector<std::string> keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  GenerationLevel level;
  level.order = order;
  level.graphs.reserve(keys.size());
  level.keys.reserve(keys.size());
  for (auto& key : keys) {
    level.graphs.push_back(parse_graph6(key));
    level.keys.push_back(CanonicalForm{std::move(key)});
  }
  return level;
}

// Partitions of n into parts >= 2, parts non-increasing.
void partitions(int n, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(n, max_part); part >= 2; --part) {
    current.push_back(part);
    partitions(n - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

GenerationLevel extend_connected(const GenerationLevel& parent, int jobs) {
  const int n = parent.order + 1;
  check_order(n, 2);
  std::vector<std::vector<std::string>> found(chunk_ranges(parent.graphs.size(), jobs).size());
  for_each_chunk(parent.graphs.size(), jobs, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    std::unordered_map<std::string, bool> seen;
    const VertexSet all = low_bits(parent.order);
    for (std::size_t i = begin; i < end; ++i) {
      const Graph& base = parent.graphs[i];
      Graph child(n);
      for (auto [u, v] : base.edges()) child.add_edge(u, v);
      for (VertexSet s = 1; s <= all; ++s) {
        Graph g = child;
        for (VertexSet m = s; m != 0; m &= m - 1) g.add_edge(n - 1, std::countr_zero(m));
        seen.emplace(canonical_form(g).bytes, true);
      }
    }
    auto& keys = found[chunk];
    keys.reserve(seen.size());
    for (auto& entry : seen) keys.push_back(entry.first);
  });
  std::vector<std::string> keys;
  for (auto& chunk : found) keys.insert(keys.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  return from_sorted_keys(n, std::move(keys));
}

const GenerationLevel& GraphCatalog::connected(int n) {
  check_order(n, 1);
  std::lock_guard lock(mutex_);
  if (!levels_.contains(1)) levels_.emplace(1, std::make_unique<GenerationLevel>(single_vertex()));
  for (int k = 2; k <= n; ++k) {
    if (!levels_.contains(k)) {
      levels_.emplace(k, std::make_unique<GenerationLevel>(extend_connected(*levels_.at(k - 1), jobs_)));
    }
  }
  return *levels_.at(n);
}

std::vector<Graph> GraphCatalog::without_isolated(int n) {
  check_order(n, 2);
  std::vector<std::vector<int>> parts_list;
  std::vector<int> current;
  partitions(n, n, current, parts_list);

  std::vector<std::string> keys;
  for (const auto& parts : parts_list) {
    // Choose a non-decreasing index sequence within each run of equal part sizes.
    std::vector<const GenerationLevel*> levels;
    for (int p : parts) levels.push_back(&connected(p));
    std::vector<std::size_t> pick(parts.size(), 0);
    while (true) {
      Graph g = levels[0]->graphs[pick[0]];
      for (std::size_t i = 1; i < parts.size(); ++i) g = disjoint_union(g, levels[i]->graphs[pick[i]]);
      keys.push_back(canonical_form(g).bytes);

      std::size_t i = parts.size();
      bool advanced = false;
      while (i-- > 0) {
        if (pick[i] + 1 < levels[i]->graphs.size()) {
          ++pick[i];
          for (std::size_t j = i + 1; j < parts.size(); ++j) {
            pick[j] = parts[j] == parts[j - 1] ? pick[j - 1] : 0;
          }
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return from_sorted_keys(n, std::move(keys)).graphs;
}

std::vector<Graph> GraphCatalog::all(int n) {
  check_order(n, 1);
  std::vector<std::string> keys;
  keys.push_back(canonical_form(Graph(n)).bytes);
  for (int k = 2; k <= n; ++k) {
    for (const Graph& g : without_isolated(k)) {
      keys.push_back(canonical_form(k == n ? g : disjoint_union(g, Graph(n - k))).bytes);
    }
  }
  return from_sorted_keys(n, std::move(keys)).graphs;
}

std::vector<Graph> connected_graphs(int n, int jobs) {
  GraphCatalog catalog(jobs);
  return catalog.connected(n).graphs;
}

std::vector<Graph> graphs_without_isolated(int n, int jobs) {
  GraphCatalog catalog(jobs);
  return catalog.without_isolated(n);
}

std::vector<Graph> all_graphs(int n, int jobs) {
  GraphCatalog catalog(jobs);
  return catalog.all(n);
}

}  // namespace mixspec
