#include <doctest.h>

#include <set>
#include <vector>

#include "mixspec/enumerate.hpp"
#include "mixspec/graph.hpp"
#include "mixspec/isomorphism.hpp"
#include "mixspec/parallel.hpp"
#include "oracles.hpp"

using namespace mixspec;

namespace {

std::set<std::uint64_t> brute_keys(const std::vector<Graph>& graphs) {
  std::set<std::uint64_t> out;
  for (const Graph& g : graphs) out.insert(oracle::brute_canonical(g));
  return out;
}

}  // namespace

TEST_CASE("connected graph counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853, 11117};
  GraphCatalog catalog;
  for (int n = 1; n <= 8; ++n) {
    const auto& level = catalog.connected(n);
    CHECK(level.graphs.size() == expected[static_cast<std::size_t>(n - 1)]);
    std::set<CanonicalForm> keys(level.keys.begin(), level.keys.end());
    CHECK(keys.size() == level.graphs.size());
    for (const Graph& g : level.graphs) CHECK(is_connected(g));
  }
}

TEST_CASE("all-graph and isolated-free counts") {
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044, 12346};
  const std::vector<std::size_t> no_isolated{0, 1, 2, 7, 23, 122, 888, 11302};
  GraphCatalog catalog;
  for (int n = 1; n <= 8; ++n) {
    CHECK(catalog.all(n).size() == all[static_cast<std::size_t>(n - 1)]);
    if (n >= 2) CHECK(catalog.without_isolated(n).size() == no_isolated[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("enumeration equals the labeled-graph oracle up to six vertices") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(brute_keys(connected_graphs(n)) == oracle::labeled_classes(n, true, false));
    CHECK(brute_keys(all_graphs(n)) == oracle::labeled_classes(n, false, false));
    if (n >= 2) CHECK(brute_keys(graphs_without_isolated(n)) == oracle::labeled_classes(n, false, true));
  }
}

TEST_CASE("isolated-free graphs on six vertices include the disconnected unions") {
  const auto graphs = graphs_without_isolated(6);
  const Graph k3 = graph_from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
  const Graph p3 = graph_from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  std::set<CanonicalForm> keys;
  for (const Graph& g : graphs) keys.insert(canonical_form(g));
  CHECK(keys.count(canonical_form(disjoint_union(k3, k3))) == 1);
  CHECK(keys.count(canonical_form(disjoint_union(p3, p3))) == 1);
}

TEST_CASE("parallel enumeration is deterministic") {
  const auto serial = connected_graphs(7, 1);
  const auto threaded = connected_graphs(7, 3);
  CHECK(serial == threaded);
}

TEST_CASE("enumeration order bounds") {
  CHECK_THROWS(connected_graphs(0));
  CHECK_THROWS(connected_graphs(kMaxEnumerationOrder + 1));
  CHECK_THROWS(graphs_without_isolated(1));
}

TEST_CASE("chunk ranges cover the index space") {
  for (std::size_t count : {0UL, 1UL, 7UL, 100UL}) {
    for (int jobs : {1, 2, 3, 8}) {
      const auto ranges = chunk_ranges(count, jobs);
      std::size_t next = 0;
      for (const auto& [b, e] : ranges) {
        CHECK(b == next);
        CHECK(e >= b);
        next = e;
      }
      CHECK(next == count);
      CHECK(ranges.size() <= static_cast<std::size_t>(jobs));
    }
  }
}
