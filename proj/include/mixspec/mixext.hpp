#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mixspec/graph.hpp"
#include "mixspec/int_matrix.hpp"

namespace mixspec {

/// Signed cell sizes: t > 0 is a clique of order t, t < 0 a coclique of order -t.
using ExtensionType = std::vector<int>;

/// Malformed type string; position() is the 0-based character offset of the bad field.
class TypeParseError : public std::invalid_argument {
 public:
  TypeParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Throws GraphError on a zero entry, a length mismatch, or more than 62 vertices in total.
void check_type(const Graph& base, std::span<const int> type);
int type_order(std::span<const int> type);

/// Cell i occupies the vertices [offset_i, offset_i + |t_i|), in base-vertex order.
Graph expand(const Graph& base, std::span<const int> type);
/// Number of edges of expand(base, type), computed without building it.
long long expanded_edge_count(const Graph& base, std::span<const int> type);

/// Block row sums: Q[i][i] = t_i - 1 for cliques and 0 for cocliques, Q[i][j] = |t_j| on edges.
IntMatrix quotient_matrix(const Graph& base, std::span<const int> type);

/// Comma-separated signed integers; an empty field or "." stands for a singleton cell (+1).
ExtensionType parse_type(std::string_view text);
std::string format_type(std::span<const int> type);

/// Singleton cells written as +1 so that equal graphs get equal types.
ExtensionType normalized(std::span<const int> type);

}  // namespace mixspec
