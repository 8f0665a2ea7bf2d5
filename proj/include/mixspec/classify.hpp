#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "mixspec/graph.hpp"
#include "mixspec/mixext.hpp"
#include "mixspec/spectra.hpp"

namespace mixspec {

/// One family that a graph realizes. expand(base, type) is isomorphic to the graph
/// with its isolated vertices removed (an edgeless graph uses base K1).
struct ClassLabel {
  std::string family;
  std::vector<int> params;
  std::string base_name;
  Graph base;
  ExtensionType type;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

struct ForbiddenWitness {
  std::string name;
  VertexSet vertices;
};

struct Subclass {
  bool in_G0 = false;   // no isolated vertices
  bool in_Gpp = false;  // connected, two positive, one below -1, none in (-1, 0)
};

/// At most three eigenvalues outside {-1, 0}; decided from the ranks of A and A + I.
bool in_class_G(const Graph& g);
Subclass subclass(const Graph& g);

/// Every matching family, in a fixed order. Empty means the graph is not covered.
std::vector<ClassLabel> classify(const Graph& g);
/// Same decision as !classify(g).empty() but stops at the first match.
bool has_classification(const Graph& g);

/// Catalog entries found as induced subgraphs, each with its least witness.
/// The first call checks every catalog graph against its recorded spectral
/// obstruction and throws std::logic_error on a mismatch.
std::vector<ForbiddenWitness> forbidden_scan(const Graph& g);
void validate_forbidden_catalog();

using GraphPredicate = std::function<bool(const Graph&)>;
/// The spectral condition violated by every catalog graph: n_pos <= 2 and n_lt_neg1 <= 1.
bool interlacing_admissible(const Graph& g);
/// Connected graphs on at most max_n vertices that fail `predicate` while every proper
/// induced subgraph satisfies it, in order of size then canonical key. max_n in 1..7.
std::vector<Graph> minimal_forbidden(int max_n, const GraphPredicate& predicate);

bool is_disjoint_union_of_cliques(const Graph& g);
/// Complete multipartite after removing isolated vertices; false for edgeless graphs.
bool is_complete_multipartite(const Graph& g);

/// Parameter lists for the two sporadic path-on-four-vertices families.
inline constexpr std::array<std::array<int, 3>, 10> kP4CliqueCocliqueTriples{{
    {3, 3, 6}, {3, 4, 4}, {3, 6, 3}, {4, 2, 6}, {4, 3, 3}, {4, 6, 2}, {5, 2, 4}, {5, 4, 2}, {7, 2, 3}, {7, 3, 2}}};
inline constexpr std::array<std::array<int, 4>, 8> kP4CliqueQuadruples{{
    {2, 2, 2, 7}, {2, 2, 3, 4}, {2, 2, 6, 3}, {2, 3, 2, 5}, {2, 3, 4, 3}, {2, 5, 2, 4}, {2, 5, 3, 3}, {3, 2, 2, 3}}};

}  // namespace mixspec
