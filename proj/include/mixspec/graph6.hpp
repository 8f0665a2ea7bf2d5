#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mixspec/graph.hpp"

namespace mixspec {

/// Malformed graph6 input; `position()` is the byte offset of the offending character.
class Graph6Error : public std::invalid_argument {
 public:
  Graph6Error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at byte " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// graph6, single-byte size form only (1 <= n <= 62). A trailing '\n' is accepted.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Reads one graph per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace mixspec
