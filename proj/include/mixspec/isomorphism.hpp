#pragma once

#include <compare>
#include <optional>
#include <string>

#include "mixspec/graph.hpp"

namespace mixspec {

/// Isomorphism-invariant key: the graph6 encoding of the canonically relabeled graph.
/// Two graphs have equal keys iff they are isomorphic; keys are totally ordered.
struct CanonicalForm {
  std::string bytes;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical relabeling: equitable refinement, then an exhaustive individualization
/// search keeping the lexicographically largest relabeled adjacency.
Graph canonical_graph(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

/// Lexicographically least vertex subset S (as a sorted list) with H[S] isomorphic to `pattern`.
std::optional<VertexSet> contains_induced(const Graph& host, const Graph& pattern);

}  // namespace mixspec
