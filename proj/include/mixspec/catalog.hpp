#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mixspec/graph.hpp"

namespace mixspec {

/// Which spectral obstruction rules a forbidden graph out of the connected
/// two-positive/one-below-minus-one class.
enum class Obstruction { kTwoBelowMinusOne, kThreePositive };

struct ForbiddenEntry {
  std::string name;
  Graph graph;
  Obstruction obstruction;
};

/// C5, P6 and G1..G13 in that order.
const std::vector<ForbiddenEntry>& forbidden_catalog();

/// Builds a named graph.
///
/// Parametric names: complete(m), empty(m), path(m), cycle(m), star(q),
/// complete_bipartite(p,q), complete_multipartite(a,b,...), pineapple(p,q),
/// complete_split(p,q). Fixed names: every forbidden catalog entry plus the
/// aliases bull, house, gem, wheel4.
///
/// pineapple(p,q) uses the cell layout of expand(P3, (p,1,-q)) and
/// complete_split(p,q) that of expand(K2, (-p,q)).
Graph named_graph(std::string_view name, std::span<const int> params = {});

/// Parses short names used on the command line: K4, P5, C6, E3 (empty), S3 (star),
/// K2,3 / K2,2,1 (complete multipartite), C5, P6, G1..G13, bull, house, gem, wheel4.
/// Returns false if the string is not a recognized short name.
bool parse_named_graph(std::string_view text, Graph& out);

}  // namespace mixspec
