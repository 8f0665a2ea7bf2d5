#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mixspec/catalog.hpp"
#include "mixspec/classify.hpp"
#include "mixspec/dioph.hpp"
#include "mixspec/enumerate.hpp"
#include "mixspec/isomorphism.hpp"
#include "mixspec/mixext.hpp"
#include "mixspec/spectra.hpp"

using namespace mixspec;

namespace {

Graph path(int n) { return named_graph("path", std::vector<int>{n}); }

bool has_family(const std::vector<ClassLabel>& labels, const std::string& family) {
  return std::any_of(labels.begin(), labels.end(), [&](const ClassLabel& l) { return l.family == family; });
}

const ClassLabel* find_label(const std::vector<ClassLabel>& labels, const std::string& family) {
  for (const auto& l : labels)
    if (l.family == family) return &l;
  return nullptr;
}

}  // namespace

TEST_CASE("spectral membership examples") {
  CHECK(in_class_G(named_graph("complete", std::vector<int>{5})));
  CHECK(in_class_G(named_graph("complete_bipartite", std::vector<int>{3, 4})));
  CHECK(in_class_G(named_graph("pineapple", std::vector<int>{3, 2})));
  CHECK_FALSE(in_class_G(named_graph("C5")));
  CHECK_FALSE(in_class_G(named_graph("P6")));
  CHECK(in_class_G(Graph(4)));
}

TEST_CASE("subclass flags") {
  const auto p4 = subclass(path(4));
  CHECK(p4.in_G0);
  CHECK_FALSE(p4.in_Gpp);  // two positive, two below -1
  const auto k23 = subclass(named_graph("complete_bipartite", std::vector<int>{2, 3}));
  CHECK(k23.in_G0);
  CHECK_FALSE(k23.in_Gpp);
  const auto pine = subclass(expand(path(3), ExtensionType{3, 1, -2}));
  CHECK(pine.in_Gpp);
  CHECK_FALSE(subclass(disjoint_union(Graph(1), path(3))).in_G0);
}

TEST_CASE("classification examples") {
  const auto k23 = classify(named_graph("complete_bipartite", std::vector<int>{2, 3}));
  const ClassLabel* kpq = find_label(k23, "K_p,q");
  REQUIRE(kpq != nullptr);
  std::vector<int> params = kpq->params;
  std::sort(params.begin(), params.end());
  CHECK(params == std::vector<int>{2, 3});

  const auto iv = classify(expand(path(4), ExtensionType{2, 2, 2, 7}));
  CHECK(has_family(iv, "P4(iv)"));

  CHECK(classify(named_graph("C5")).empty());
  CHECK_FALSE(has_classification(named_graph("P6")));

  const auto pine = classify(expand(path(3), ExtensionType{3, 1, -2}));
  CHECK(has_family(pine, "P3(i)"));
  CHECK(has_family(pine, "P3-ext"));

  const auto edgeless = classify(Graph(4));
  REQUIRE(edgeless.size() == 1);
  CHECK(edgeless[0].family == "edgeless");
  CHECK(edgeless[0].type == ExtensionType{-4});

  const Graph k3 = named_graph("complete", std::vector<int>{3});
  const auto two = classify(disjoint_union(k3, named_graph("complete", std::vector<int>{2})));
  REQUIRE(two.size() == 1);
  CHECK(two[0].family == "K_p+K_q");
  CHECK(two[0].params == std::vector<int>{2, 3});

  const auto with_biclique = classify(disjoint_union(k3, named_graph("complete_bipartite", std::vector<int>{2, 2})));
  REQUIRE(with_biclique.size() == 1);
  CHECK(with_biclique[0].family == "K_p+K_q,r");
  CHECK(with_biclique[0].base_name == "K1+K2");

  CHECK(classify(disjoint_union(path(4), k3)).empty());
}

TEST_CASE("every label reconstructs its graph") {
  GraphCatalog catalog;
  int labels = 0;
  int bad = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : catalog.all(n)) {
      const Graph h = without_isolated(g);
      for (const ClassLabel& l : classify(g)) {
        ++labels;
        const Graph built = expand(l.base, l.type);
        if (h.order() == 0) {
          bad += built.order() != g.order() || built.edge_count() != 0;
        } else {
          bad += !is_isomorphic(built, h);
        }
      }
      bad += has_classification(g) != !classify(g).empty();
    }
  }
  CHECK(labels > 400);
  CHECK(bad == 0);
}

TEST_CASE("spectral and constructive membership agree up to seven vertices") {
  GraphCatalog catalog;
  int bad = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : catalog.all(n)) bad += in_class_G(g) != has_classification(g);
  CHECK(bad == 0);
}

TEST_CASE("smallest eigenvalue and positive-eigenvalue characterizations") {
  GraphCatalog catalog;
  int bad = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : catalog.all(n)) {
      const auto s = spectral_summary(g);
      bad += (s.n_lt_neg1 == 0) != is_disjoint_union_of_cliques(g);
      bad += (s.n_pos == 1) != is_complete_multipartite(g);
    }
  }
  CHECK(bad == 0);
  CHECK(is_disjoint_union_of_cliques(Graph(3)));
  CHECK_FALSE(is_complete_multipartite(Graph(3)));
  CHECK(is_complete_multipartite(disjoint_union(named_graph("complete_bipartite", std::vector<int>{2, 2}), Graph(2))));
  CHECK_FALSE(is_complete_multipartite(path(4)));
}

TEST_CASE("forbidden scan") {
  CHECK_NOTHROW(validate_forbidden_catalog());
  const auto c5 = forbidden_scan(named_graph("C5"));
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].name == "C5");
  CHECK(c5[0].vertices == low_bits(5));

  const auto c7 = forbidden_scan(named_graph("cycle", std::vector<int>{7}));
  REQUIRE_FALSE(c7.empty());
  CHECK(c7[0].name == "P6");
  CHECK(forbidden_scan(named_graph("complete", std::vector<int>{6})).empty());
}

TEST_CASE("members of the two-positive subclass avoid the forbidden catalog") {
  GraphCatalog catalog;
  int members = 0;
  int bad = 0;
  for (int n = 5; n <= 9; ++n) {
    for (const Graph& g : catalog.connected(n).graphs) {
      if (!subclass(g).in_Gpp) continue;
      ++members;
      bad += !forbidden_scan(g).empty();
    }
  }
  CHECK(members > 0);
  CHECK(bad == 0);
}

TEST_CASE("minimal forbidden graphs for interlacing") {
  CHECK(minimal_forbidden(4, interlacing_admissible).empty());
  const auto five = minimal_forbidden(5, interlacing_admissible);
  std::set<CanonicalForm> keys;
  for (const Graph& g : five) keys.insert(canonical_form(g));
  CHECK(keys.count(canonical_form(named_graph("C5"))) == 1);
  for (const char* name : {"G1", "G2", "G3", "G4", "G5"}) {
    CAPTURE(name);
    CHECK(keys.count(canonical_form(named_graph(name))) == 1);
  }
  CHECK_THROWS_AS(minimal_forbidden(8, interlacing_admissible), std::invalid_argument);
}

TEST_CASE("sporadic parameter tables match the solvers") {
  std::vector<std::vector<long long>> triples;
  for (const auto& t : kP4CliqueCocliqueTriples) triples.push_back({t[0], t[1], t[2]});
  std::vector<std::vector<long long>> quads;
  for (const auto& t : kP4CliqueQuadruples) quads.push_back({t[0], t[1], t[2], t[3]});
  CHECK(dioph::solve_thm10_iii(40).solutions == triples);
  CHECK(dioph::solve_thm10_iv(40).solutions == quads);
}

TEST_CASE("sporadic members have the expected spectrum") {
  for (const auto& [p, q, s] : kP4CliqueCocliqueTriples) {
    const Graph g = expand(path(4), ExtensionType{p, q, -1, s});
    CHECK(subclass(g).in_Gpp);
    CHECK(has_family(classify(g), "P4(iii)"));
  }
  for (const auto& [p, q, r, s] : kP4CliqueQuadruples) {
    const Graph g = expand(path(4), ExtensionType{p, q, r, s});
    CHECK(subclass(g).in_Gpp);
    CHECK(has_family(classify(g), "P4(iv)"));
  }
}

TEST_CASE("complete split-like multipartite graphs have one positive eigenvalue") {
  for (int p = 2; p <= 4; ++p) {
    for (int q = 2; q <= 4; ++q) {
      for (int r = 1; r <= 3; ++r) {
        const Graph g = expand(named_graph("complete", std::vector<int>{3}), ExtensionType{-p, -q, r});
        CHECK(spectral_summary(g).n_pos == 1);
        CHECK(has_family(classify(g), "K3(-p,-q,r)"));
      }
    }
  }
}
