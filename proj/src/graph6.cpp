#include "mixspec/graph6.hpp"

namespace mixspec {

namespace {
constexpr int kOffset = 63;
constexpr int kMaxByte = 126;
}  // namespace

Graph parse_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kOffset || c > kMaxByte) throw Graph6Error("character outside 63..126", i);
  }
  const int n = static_cast<unsigned char>(text[0]) - kOffset;
  if (n == kMaxByte - kOffset) throw Graph6Error("multi-byte size form not supported (n > 62)", 0);
  if (n < 1) throw Graph6Error("graph6 order must be at least 1", 0);

  const std::size_t nbits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - 1 < nbytes) throw Graph6Error("truncated edge data", text.size());
  if (text.size() - 1 > nbytes) throw Graph6Error("trailing garbage", 1 + nbytes);

  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kOffset;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  if (nbits % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - kOffset;
    if ((last & ((1 << (6 - nbits % 6)) - 1)) != 0) {
      throw Graph6Error("nonzero padding bits", text.size() - 1);
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n < 1 || n > kMaxOrder) throw GraphError("graph6 writer supports 1..62 vertices");
  std::string out(1, static_cast<char>(n + kOffset));
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace mixspec
