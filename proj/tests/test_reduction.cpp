#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "mixspec/catalog.hpp"
#include "mixspec/classify.hpp"
#include "mixspec/enumerate.hpp"
#include "mixspec/isomorphism.hpp"
#include "mixspec/mixext.hpp"
#include "mixspec/reduction.hpp"
#include "mixspec/spectra.hpp"
#include "oracles.hpp"

using namespace mixspec;

namespace {

Graph path(int n) { return named_graph("path", std::vector<int>{n}); }

/// Two base vertices whose cells could still be merged into one clique or coclique.
bool has_mergeable_cells(const Graph& g, const ExtensionType& type) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      const int tu = type[static_cast<std::size_t>(u)];
      const int tv = type[static_cast<std::size_t>(v)];
      if (tu > 0 && tv > 0 && g.closed_neighbors(u) == g.closed_neighbors(v)) return true;
      if ((tu < 0 || tu == 1) && (tv < 0 || tv == 1) && g.neighbors(u) == g.neighbors(v)) return true;
    }
  }
  return false;
}

bool has_true_twins(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.closed_neighbors(u) == g.closed_neighbors(v)) return true;
  return false;
}

/// Merges true twins in a random order until none remain.
Graph random_contraction(Graph g, std::mt19937_64& rng) {
  while (true) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v)
        if (g.closed_neighbors(u) == g.closed_neighbors(v)) pairs.emplace_back(u, v);
    if (pairs.empty()) return g;
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    const int drop = pairs[pick(rng)].second;
    g = induced_subgraph(g, g.vertices() & ~bit(drop));
  }
}

std::set<ExtensionType> as_set(const std::vector<ExtensionType>& types) {
  std::set<ExtensionType> out;
  for (const auto& t : types) out.insert(normalized(t));
  return out;
}

}  // namespace

TEST_CASE("twin classes") {
  const Graph k4 = named_graph("complete", std::vector<int>{4});
  const auto t = true_twin_classes(k4);
  REQUIRE(t.size() == 1);
  CHECK(t.classes[0].kind == TwinPartition::Kind::kTrue);
  CHECK(false_twin_classes(k4).size() == 4);

  const Graph k23 = named_graph("complete_bipartite", std::vector<int>{2, 3});
  CHECK(false_twin_classes(k23).size() == 2);
  CHECK(mixed_twin_classes(k23).size() == 2);

  const Graph p4 = path(4);
  CHECK(mixed_twin_classes(p4).size() == 4);
  const auto m = mixed_twin_classes(expand(path(3), ExtensionType{3, 1, -2}));
  REQUIRE(m.size() == 3);
  CHECK(m.classes[0].kind == TwinPartition::Kind::kTrue);
  CHECK(m.classes[1].kind == TwinPartition::Kind::kSingleton);
  CHECK(m.classes[2].kind == TwinPartition::Kind::kFalse);
}

TEST_CASE("true-twin contraction examples") {
  for (int n = 1; n <= 6; ++n) {
    const auto c = contract_true_twins(named_graph("complete", std::vector<int>{n}));
    CHECK(c.base.order() == 1);
    CHECK(c.type == ExtensionType{n});
  }
  const auto pine = contract_true_twins(named_graph("pineapple", std::vector<int>{3, 2}));
  CHECK(is_isomorphic(pine.base, named_graph("star", std::vector<int>{3})));
  CHECK(pine.type == ExtensionType{3, 1, 1, 1});
  CHECK(is_bipartite(pine.base));

  const auto p5 = contract_true_twins(path(5));
  CHECK(p5.base == path(5));
  CHECK(p5.type == ExtensionType(5, 1));
}

TEST_CASE("mixed reduction examples") {
  const auto p3 = reduce_mixed(path(3));
  CHECK(p3.base.order() == 2);
  CHECK(normalized(p3.type) == ExtensionType{-2, 1});

  const auto k33 = reduce_mixed(named_graph("complete_bipartite", std::vector<int>{3, 3}));
  CHECK(k33.type == ExtensionType{-3, -3});

  const auto c5 = reduce_mixed(named_graph("C5"));
  CHECK(c5.base == named_graph("C5"));

  const auto pine = reduce_mixed(named_graph("pineapple", std::vector<int>{3, 2}));
  CHECK(pine.base.order() == 3);
  CHECK(pine.type == ExtensionType{3, 1, -2});
}

TEST_CASE("reductions reconstruct the graph") {
  GraphCatalog catalog;
  for (int n = 1; n <= 7; ++n) {
    int bad = 0;
    for (const Graph& g : catalog.all(n)) {
      const auto r = reduce_mixed(g);
      bad += !is_isomorphic(expand(r.base, r.type), g);
      bad += has_mergeable_cells(r.base, r.type);
      const auto c = contract_true_twins(g);
      bad += !is_isomorphic(expand(c.base, c.type), g);
      bad += has_true_twins(c.base);
      for (int t : c.type) bad += t < 1;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("recognition examples") {
  const Graph pine = expand(path(3), ExtensionType{3, 1, -2});
  const std::vector<PositionSpec> any3(3, PositionSpec::any());
  const auto found = recognize_extension(pine, path(3), any3);
  CHECK(found == std::vector<ExtensionType>{{-2, 1, 3}, {3, 1, -2}});

  const std::vector<PositionSpec> cocliques{PositionSpec::coclique(2), PositionSpec::coclique(2)};
  const Graph k2 = named_graph("complete", std::vector<int>{2});
  CHECK(recognize_extension(named_graph("complete_bipartite", std::vector<int>{2, 3}), k2, cocliques) ==
        std::vector<ExtensionType>{{-2, -3}, {-3, -2}});
  CHECK(recognize_extension(named_graph("C5"), k2, cocliques).empty());

  const std::vector<PositionSpec> big(6, PositionSpec::any());
  CHECK_THROWS_AS(recognize_extension(path(6), path(6), big), GraphError);
}

TEST_CASE("recognition agrees with exhaustive cell assignment") {
  GraphCatalog catalog;
  std::vector<Graph> bases;
  for (int k = 1; k <= 4; ++k)
    for (const Graph& b : catalog.connected(k).graphs) bases.push_back(b);
  int checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& host : catalog.connected(n).graphs) {
      for (const Graph& base : bases) {
        if (base.order() > n) continue;
        const std::vector<PositionSpec> pattern(static_cast<std::size_t>(base.order()), PositionSpec::any());
        CHECK(as_set(recognize_extension(host, base, pattern)) == oracle::partition_search(host, base));
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("recognition respects sign constraints") {
  const Graph p4 = path(4);
  const Graph host = expand(p4, ExtensionType{-2, -3, -2, -2});
  const std::vector<PositionSpec> cocliques(4, PositionSpec::coclique());
  const std::vector<PositionSpec> cliques(4, PositionSpec::clique());
  CHECK_FALSE(recognize_extension(host, p4, cocliques).empty());
  CHECK(recognize_extension(host, p4, cliques).empty());
  const std::vector<PositionSpec> pinned{PositionSpec::coclique_of(2), PositionSpec::coclique_of(3),
                                         PositionSpec::coclique(), PositionSpec::coclique()};
  CHECK(recognize_extension(host, p4, pinned) == std::vector<ExtensionType>{{-2, -3, -2, -2}});
}

TEST_CASE("contraction of two-positive class members") {
  // Every connected graph with two positive eigenvalues and one below -1 (and
  // nothing else outside {-1, 0}) contracts to a bipartite graph with at most two
  // positive eigenvalues.
  GraphCatalog catalog;
  int members = 0;
  int bad = 0;
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : catalog.connected(n).graphs) {
      if (!subclass(g).in_Gpp) continue;
      ++members;
      const Graph base = contract_true_twins_fixpoint(g);
      bad += !is_bipartite(base);
      bad += spectral_summary(base).n_pos > 2;
    }
  }
  CHECK(members > 0);
  CHECK(bad == 0);
}

TEST_CASE("true-twin contraction is order independent on small graphs") {
  // Merging true twins never creates or destroys other true-twin relations, so
  // every merge order reaches the same base up to isomorphism.
  std::mt19937_64 rng(31);
  GraphCatalog catalog;
  int bad = 0;
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : catalog.connected(n).graphs) {
      const CanonicalForm expected = canonical_form(contract_true_twins_fixpoint(g));
      for (int r = 0; r < 3; ++r) bad += canonical_form(random_contraction(g, rng)) != expected;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("mixed reduction in random merge orders") {
  // Any maximal sequence of compatible twin merges reconstructs the graph. The
  // resulting base is not unique in general; the count of graphs where two orders
  // disagree is reported, not asserted.
  std::mt19937_64 rng(47);
  GraphCatalog catalog;
  int bad = 0;
  int divergent = 0;
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : catalog.connected(n).graphs) {
      const CanonicalForm reference = canonical_form(reduce_mixed(g).base);
      bool differs = false;
      for (int r = 0; r < 3; ++r) {
        Graph base = g;
        ExtensionType type(static_cast<std::size_t>(n), 1);
        while (true) {
          std::vector<std::pair<int, int>> merges;
          for (int u = 0; u < base.order(); ++u) {
            for (int v = u + 1; v < base.order(); ++v) {
              const int tu = type[static_cast<std::size_t>(u)];
              const int tv = type[static_cast<std::size_t>(v)];
              const bool cliques = tu > 0 && tv > 0 && base.closed_neighbors(u) == base.closed_neighbors(v);
              const bool cocliques = (tu < 0 || tu == 1) && (tv < 0 || tv == 1) && base.neighbors(u) == base.neighbors(v);
              if (cliques || cocliques) merges.emplace_back(u, v);
            }
          }
          if (merges.empty()) break;
          std::uniform_int_distribution<std::size_t> pick(0, merges.size() - 1);
          const auto [u, v] = merges[pick(rng)];
          const int tu = type[static_cast<std::size_t>(u)];
          const int tv = type[static_cast<std::size_t>(v)];
          const bool as_clique = base.adjacent(u, v);
          type[static_cast<std::size_t>(u)] = as_clique ? tu + tv : -(std::abs(tu) + std::abs(tv));
          type.erase(type.begin() + v);
          base = induced_subgraph(base, base.vertices() & ~bit(v));
        }
        bad += !is_isomorphic(expand(base, type), g);
        differs = differs || canonical_form(base) != reference;
      }
      divergent += differs;
    }
  }
  CHECK(bad == 0);
  MESSAGE("connected graphs on <= 7 vertices with order-dependent mixed reduction: " << divergent);
}
