#include "mixspec/mixext.hpp"

#include <charconv>
#include <cstdlib>

namespace mixspec {

int type_order(std::span<const int> type) {
  long long total = 0;
  for (int t : type) total += std::llabs(t);
  return total > kMaxOrder ? kMaxOrder + 1 : static_cast<int>(total);
}

void check_type(const Graph& base, std::span<const int> type) {
  if (static_cast<int>(type.size()) != base.order()) {
    throw GraphError("type length " + std::to_string(type.size()) + " does not match base order " +
                     std::to_string(base.order()));
  }
  for (int t : type) {
    if (t == 0) throw GraphError("type entries must be nonzero");
    if (t > kMaxOrder || t < -kMaxOrder) throw GraphError("type entry exceeds the vertex cap");
  }
  if (type_order(type) > kMaxOrder) throw GraphError("mixed extension exceeds 62 vertices");
}

Graph expand(const Graph& base, std::span<const int> type) {
  check_type(base, type);
  const int n = base.order();
  std::vector<VertexSet> cell(static_cast<std::size_t>(n), 0);
  int offset = 0;
  for (int i = 0; i < n; ++i) {
    const int size = std::abs(type[static_cast<std::size_t>(i)]);
    cell[static_cast<std::size_t>(i)] = low_bits(size) << offset;
    offset += size;
  }
  Graph h(offset);
  for (int i = 0; i < n; ++i) {
    const auto ci = members(cell[static_cast<std::size_t>(i)]);
    if (type[static_cast<std::size_t>(i)] > 0) {
      for (std::size_t a = 0; a < ci.size(); ++a)
        for (std::size_t b = a + 1; b < ci.size(); ++b) h.add_edge(ci[a], ci[b]);
    }
    for (int j = i + 1; j < n; ++j) {
      if (!base.adjacent(i, j)) continue;
      for (int u : ci)
        for (int v : members(cell[static_cast<std::size_t>(j)])) h.add_edge(u, v);
    }
  }
  return h;
}

long long expanded_edge_count(const Graph& base, std::span<const int> type) {
  long long edges = 0;
  for (int t : type) {
    if (t > 1) edges += static_cast<long long>(t) * (t - 1) / 2;
  }
  for (auto [u, v] : base.edges()) {
    edges += static_cast<long long>(std::abs(type[static_cast<std::size_t>(u)])) *
             std::abs(type[static_cast<std::size_t>(v)]);
  }
  return edges;
}

IntMatrix quotient_matrix(const Graph& base, std::span<const int> type) {
  check_type(base, type);
  const auto n = static_cast<std::size_t>(base.order());
  IntMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    q(i, i) = type[i] > 0 ? type[i] - 1 : 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && base.adjacent(static_cast<int>(i), static_cast<int>(j))) q(i, j) = std::abs(type[j]);
    }
  }
  return q;
}

ExtensionType parse_type(std::string_view text) {
  ExtensionType out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::string_view field = text.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < field.size() && field[lead] == ' ') ++lead;
    field.remove_prefix(lead);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    const std::size_t position = start + lead;

    if (field.empty() || field == ".") {
      out.push_back(1);
    } else {
      int value = 0;
      const char* first = field.data();
      if (*first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, field.data() + field.size(), value);
      if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw TypeParseError("malformed type entry '" + std::string(field) + "'", position);
      }
      if (value == 0) throw TypeParseError("type entries must be nonzero", position);
      if (value > kMaxOrder || value < -kMaxOrder) throw TypeParseError("type entry exceeds the vertex cap", position);
      out.push_back(value);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (type_order(out) > kMaxOrder) throw TypeParseError("mixed extension exceeds 62 vertices", 0);
  return out;
}

std::string format_type(std::span<const int> type) {
  std::string out = "(";
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(type[i]);
  }
  return out + ")";
}

ExtensionType normalized(std::span<const int> type) {
  ExtensionType out(type.begin(), type.end());
  for (int& t : out) {
    if (t == -1) t = 1;
  }
  return out;
}

}  // namespace mixspec
