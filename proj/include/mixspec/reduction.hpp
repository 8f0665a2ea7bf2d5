#pragma once

#include <vector>

#include "mixspec/graph.hpp"
#include "mixspec/mixext.hpp"

namespace mixspec {

/// Vertex partition into twin classes, ordered by smallest member.
struct TwinPartition {
  enum class Kind { kSingleton, kTrue, kFalse };
  struct Class {
    VertexSet members;
    Kind kind;
  };
  std::vector<Class> classes;

  std::size_t size() const { return classes.size(); }
};

/// Classes of identical rows of A + I (adjacent twins).
TwinPartition true_twin_classes(const Graph& g);
/// Classes of identical rows of A (non-adjacent twins).
TwinPartition false_twin_classes(const Graph& g);
/// Nontrivial true- and false-twin classes together with the remaining singletons.
/// No vertex has both kinds of twin, so this is a partition; a mixed extension of a
/// base on k vertices has at most k classes.
TwinPartition mixed_twin_classes(const Graph& g);

/// Base graph and clique sizes after collapsing every true-twin class, repeated
/// until no two vertices are true twins.
struct Contraction {
  Graph base;
  ExtensionType type;
};
Contraction contract_true_twins(const Graph& g);
inline Graph contract_true_twins_fixpoint(const Graph& g) { return contract_true_twins(g).base; }

/// Repeatedly merges the lowest-indexed twin pair (true twins whose cells are
/// cliques first, then false twins whose cells are cocliques) until none is left.
/// The result is deterministic but not unique in general.
Contraction reduce_mixed(const Graph& g);

/// Constraint on one base position of a recognized type.
struct PositionSpec {
  enum class Sign { kAny, kClique, kCoclique, kUnit };
  Sign sign = Sign::kAny;
  int min_size = 1;
  int fixed_size = 0;  // 0 = free

  static PositionSpec any(int min_size = 1) { return {Sign::kAny, min_size, 0}; }
  static PositionSpec clique(int min_size = 1) { return {Sign::kClique, min_size, 0}; }
  static PositionSpec coclique(int min_size = 1) { return {Sign::kCoclique, min_size, 0}; }
  static PositionSpec clique_of(int size) { return {Sign::kClique, size, size}; }
  static PositionSpec coclique_of(int size) { return {Sign::kCoclique, size, size}; }
  static PositionSpec unit() { return {Sign::kUnit, 1, 1}; }
};

/// Every type t satisfying the pattern with expand(base, t) isomorphic to `host`.
/// Sizes run over compositions in lexicographic order; for a free sign the clique
/// is tried before the coclique. Singleton cells are reported as +1 unless the
/// position is pinned to a coclique. Requires base order <= 5.
std::vector<ExtensionType> recognize_extension(const Graph& host, const Graph& base,
                                               std::span<const PositionSpec> pattern);

}  // namespace mixspec
