#include "mixspec/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "mixspec/isomorphism.hpp"

namespace mixspec {

namespace {

TwinPartition group_rows(const Graph& g, bool closed) {
  std::map<VertexSet, VertexSet> by_row;
  for (int v = 0; v < g.order(); ++v) by_row[closed ? g.closed_neighbors(v) : g.neighbors(v)] |= bit(v);
  TwinPartition out;
  for (const auto& [row, members] : by_row) {
    const auto kind = popcount(members) == 1 ? TwinPartition::Kind::kSingleton
                      : closed                ? TwinPartition::Kind::kTrue
                                              : TwinPartition::Kind::kFalse;
    out.classes.push_back({members, kind});
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) { return std::countr_zero(a.members) < std::countr_zero(b.members); });
  return out;
}

Graph remove_vertex(const Graph& g, int v) { return induced_subgraph(g, g.vertices() & ~bit(v)); }

}  // namespace

TwinPartition true_twin_classes(const Graph& g) { return group_rows(g, true); }

TwinPartition false_twin_classes(const Graph& g) { return group_rows(g, false); }

TwinPartition mixed_twin_classes(const Graph& g) {
  TwinPartition out;
  VertexSet covered = 0;
  const TwinPartition t = true_twin_classes(g);
  const TwinPartition f = false_twin_classes(g);
  for (const auto& c : t.classes) {
    if (c.kind != TwinPartition::Kind::kSingleton) {
      out.classes.push_back(c);
      covered |= c.members;
    }
  }
  for (const auto& c : f.classes) {
    if (c.kind != TwinPartition::Kind::kSingleton) {
      out.classes.push_back(c);
      covered |= c.members;
    }
  }
  for (int v : members(g.vertices() & ~covered)) out.classes.push_back({bit(v), TwinPartition::Kind::kSingleton});
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) { return std::countr_zero(a.members) < std::countr_zero(b.members); });
  return out;
}

Contraction contract_true_twins(const Graph& g) {
  Contraction out{g, ExtensionType(static_cast<std::size_t>(g.order()), 1)};
  while (true) {
    const TwinPartition classes = true_twin_classes(out.base);
    if (classes.size() == static_cast<std::size_t>(out.base.order())) return out;
    VertexSet keep = 0;
    ExtensionType type;
    for (const auto& c : classes.classes) {
      const int rep = std::countr_zero(c.members);
      keep |= bit(rep);
      int size = 0;
      for (int v : members(c.members)) size += out.type[static_cast<std::size_t>(v)];
      type.push_back(size);
    }
    // Classes are sorted by representative, matching the induced relabeling.
    out.base = induced_subgraph(out.base, keep);
    out.type = std::move(type);
  }
}

Contraction reduce_mixed(const Graph& g) {
  Contraction out{g, ExtensionType(static_cast<std::size_t>(g.order()), 1)};
  auto merge = [&](int i, int j, int size) {
    out.type[static_cast<std::size_t>(i)] = size;
    out.type.erase(out.type.begin() + j);
    out.base = remove_vertex(out.base, j);
  };
  while (true) {
    const int n = out.base.order();
    bool merged = false;
    for (int i = 0; i < n && !merged; ++i) {
      for (int j = i + 1; j < n && !merged; ++j) {
        const int ti = out.type[static_cast<std::size_t>(i)];
        const int tj = out.type[static_cast<std::size_t>(j)];
        if (ti > 0 && tj > 0 && out.base.closed_neighbors(i) == out.base.closed_neighbors(j)) {
          merge(i, j, ti + tj);
          merged = true;
        }
      }
    }
    for (int i = 0; i < n && !merged; ++i) {
      for (int j = i + 1; j < n && !merged; ++j) {
        const int ti = out.type[static_cast<std::size_t>(i)];
        const int tj = out.type[static_cast<std::size_t>(j)];
        if ((ti < 0 || ti == 1) && (tj < 0 || tj == 1) && out.base.neighbors(i) == out.base.neighbors(j)) {
          merge(i, j, -(std::abs(ti) + std::abs(tj)));
          merged = true;
        }
      }
    }
    if (!merged) return out;
  }
}

namespace {

struct Recognizer {
  const Graph& host;
  const Graph& base;
  std::span<const PositionSpec> pattern;
  CanonicalForm host_key;
  int host_edges;
  std::vector<int> host_degrees;
  std::vector<int> sizes;
  ExtensionType type;
  std::vector<ExtensionType> found;

  bool degrees_match() const {
    std::vector<int> degrees;
    degrees.reserve(host_degrees.size());
    for (int i = 0; i < base.order(); ++i) {
      const int ti = type[static_cast<std::size_t>(i)];
      int d = ti > 0 ? ti - 1 : 0;
      for (int j : members(base.neighbors(i))) d += std::abs(type[static_cast<std::size_t>(j)]);
      degrees.insert(degrees.end(), static_cast<std::size_t>(std::abs(ti)), d);
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees == host_degrees;
  }

  void try_signs(std::size_t i) {
    if (i == sizes.size()) {
      if (expanded_edge_count(base, type) != host_edges) return;
      if (!degrees_match()) return;
      if (canonical_form(expand(base, type)) == host_key) found.push_back(type);
      return;
    }
    const int s = sizes[i];
    switch (pattern[i].sign) {
      case PositionSpec::Sign::kAny:
        type[i] = s;
        try_signs(i + 1);
        if (s > 1) {
          type[i] = -s;
          try_signs(i + 1);
        }
        break;
      case PositionSpec::Sign::kClique:
      case PositionSpec::Sign::kUnit:
        type[i] = s;
        try_signs(i + 1);
        break;
      case PositionSpec::Sign::kCoclique:
        type[i] = -s;
        try_signs(i + 1);
        break;
    }
  }

  void compose(std::size_t i, int remaining, std::span<const int> min_tail) {
    if (i == sizes.size()) {
      if (remaining == 0) try_signs(0);
      return;
    }
    const PositionSpec& spec = pattern[i];
    const int lo = std::max(spec.min_size, 1);
    int hi = remaining - min_tail[i + 1];
    if (spec.fixed_size > 0) hi = std::min(hi, spec.fixed_size);
    for (int s = spec.fixed_size > 0 ? spec.fixed_size : lo; s <= hi; ++s) {
      sizes[i] = s;
      compose(i + 1, remaining - s, min_tail);
    }
  }
};

}  // namespace

std::vector<ExtensionType> recognize_extension(const Graph& host, const Graph& base,
                                               std::span<const PositionSpec> pattern) {
  const int k = base.order();
  if (k < 1 || k > 5) throw GraphError("recognize_extension: base must have 1..5 vertices");
  if (static_cast<int>(pattern.size()) != k) throw GraphError("recognize_extension: pattern length mismatch");
  const int n = host.order();
  if (n < k) return {};
  if (mixed_twin_classes(host).size() > static_cast<std::size_t>(k)) return {};

  std::vector<int> min_tail(static_cast<std::size_t>(k) + 1, 0);
  for (int i = k - 1; i >= 0; --i) {
    const auto& spec = pattern[static_cast<std::size_t>(i)];
    const int lo = spec.fixed_size > 0 ? spec.fixed_size : std::max(spec.min_size, 1);
    min_tail[static_cast<std::size_t>(i)] = min_tail[static_cast<std::size_t>(i) + 1] + lo;
  }
  if (min_tail[0] > n) return {};

  Recognizer r{host, base, pattern, canonical_form(host), host.edge_count(), {}, std::vector<int>(static_cast<std::size_t>(k)),
               ExtensionType(static_cast<std::size_t>(k)), {}};
  for (int v = 0; v < n; ++v) r.host_degrees.push_back(host.degree(v));
  std::sort(r.host_degrees.begin(), r.host_degrees.end());
  r.compose(0, n, min_tail);
  return std::move(r.found);
}

}  // namespace mixspec
