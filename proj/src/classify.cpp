#include "mixspec/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "mixspec/catalog.hpp"
#include "mixspec/enumerate.hpp"
#include "mixspec/isomorphism.hpp"
#include "mixspec/reduction.hpp"

namespace mixspec {

namespace {

using Sign = PositionSpec::Sign;

struct Family {
  std::string name;
  std::string base_name;
  Graph base;
  std::vector<PositionSpec> pattern;
  // Positions whose absolute sizes become the label parameters; empty = all positions.
  std::vector<int> param_positions;
};

Graph base_graph(const std::string& name) {
  if (name == "K1") return Graph(1);
  Graph g;
  if (!parse_named_graph(name, g)) throw std::logic_error("unknown base " + name);
  return g;
}

std::vector<Family> build_families() {
  const auto any = PositionSpec::any();
  const auto clique = PositionSpec::clique;
  const auto coclique = PositionSpec::coclique;
  const auto clique_of = PositionSpec::clique_of;
  const auto coclique_of = PositionSpec::coclique_of;
  const auto unit = PositionSpec::unit();

  std::vector<Family> f;
  auto add = [&](std::string name, const std::string& base, std::vector<PositionSpec> pattern,
                 std::vector<int> params = {}) {
    f.push_back({std::move(name), base, base_graph(base), std::move(pattern), std::move(params)});
  };
  add("K_m", "K1", {clique(2)});
  add("K_p,q", "K2", {coclique(2), coclique(2)});
  add("CS_p,q", "K2", {coclique(2), clique(1)});
  add("K_p,q,r", "K3", {coclique(2), coclique(2), coclique(2)});
  add("K3(-p,-q,r)", "K3", {coclique(2), coclique(2), clique(1)});
  add("P3(i)", "P3", {any, any, clique(2)});
  add("P4(ii)", "P4", {clique(1), coclique_of(3), coclique_of(2), coclique_of(2)}, {0});
  add("P4(ii)", "P4", {coclique_of(2), clique(1), clique(1), coclique_of(2)}, {1, 2});
  add("P4(ii)", "P4", {clique(1), coclique_of(2), clique(1), coclique_of(3)}, {0, 2});
  for (const auto& [p, q, s] : kP4CliqueCocliqueTriples) {
    add("P4(iii)", "P4", {clique_of(p), clique_of(q), coclique(1), clique_of(s)});
  }
  for (const auto& [p, q, r, s] : kP4CliqueQuadruples) {
    add("P4(iv)", "P4", {clique_of(p), clique_of(q), clique_of(r), clique_of(s)});
  }
  add("P5(v)", "P5", {unit, clique(1), coclique(1), clique(1), unit}, {1, 2, 3});
  add("K1-ext", "K1", {any});
  add("K2-ext", "K2", {any, any});
  add("P3-ext", "P3", {any, any, any});
  add("K3-ext", "K3", {any, any, any});
  return f;
}

const std::vector<Family>& families() {
  static const std::vector<Family> f = build_families();
  return f;
}

std::vector<std::vector<int>> automorphisms(const Graph& base) {
  std::vector<int> perm(static_cast<std::size_t>(base.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < base.order() && ok; ++i)
      for (int j = i + 1; j < base.order() && ok; ++j)
        ok = base.adjacent(i, j) == base.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Keeps one type per orbit of the base automorphism group: the least one found.
std::vector<ExtensionType> orbit_representatives(const Graph& base, const std::vector<ExtensionType>& found) {
  const auto autos = automorphisms(base);
  std::vector<ExtensionType> out;
  for (const auto& t : found) {
    bool least = true;
    for (const auto& sigma : autos) {
      ExtensionType image(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) image[static_cast<std::size_t>(sigma[i])] = t[i];
      if (image < t && std::find(found.begin(), found.end(), image) != found.end()) {
        least = false;
        break;
      }
    }
    if (least) out.push_back(t);
  }
  return out;
}

ClassLabel make_label(const Family& fam, const ExtensionType& t) {
  ClassLabel label{fam.name, {}, fam.base_name, fam.base, t};
  if (fam.param_positions.empty()) {
    if (fam.name.ends_with("-ext")) return label;
    for (int v : t) label.params.push_back(std::abs(v));
  } else {
    for (int i : fam.param_positions) label.params.push_back(std::abs(t[static_cast<std::size_t>(i)]));
  }
  return label;
}

enum class ComponentKind { kClique, kBiclique, kSplit, kOther };

struct ComponentShape {
  ComponentKind kind = ComponentKind::kOther;
  int a = 0;  // clique order, smaller side, or coclique part
  int b = 0;  // larger side or clique part
};

ComponentShape shape_of(const Graph& c) {
  const int n = c.order();
  const int m = c.edge_count();
  if (m == n * (n - 1) / 2) return {ComponentKind::kClique, n, 0};
  if (auto parts = bipartition(c)) {
    const int p = popcount(parts->first);
    const int q = popcount(parts->second);
    if (p >= 2 && q >= 2 && m == p * q) return {ComponentKind::kBiclique, std::min(p, q), std::max(p, q)};
  }
  VertexSet dominating = 0;
  for (int v = 0; v < n; ++v) {
    if (c.degree(v) == n - 1) dominating |= bit(v);
  }
  const int r = popcount(dominating);
  const int q = n - r;
  if (r >= 1 && q >= 2 && m == r * (r - 1) / 2 + q * r) return {ComponentKind::kSplit, q, r};
  return {};
}

std::vector<ClassLabel> classify_disconnected(const Graph& h, bool first_only) {
  std::vector<ComponentShape> shapes;
  for (VertexSet comp : components(h)) shapes.push_back(shape_of(induced_subgraph(h, comp)));
  std::vector<int> cliques;
  std::vector<ComponentShape> others;
  for (const auto& s : shapes) {
    if (s.kind == ComponentKind::kClique) {
      cliques.push_back(s.a);
    } else {
      others.push_back(s);
    }
  }
  std::sort(cliques.begin(), cliques.end());
  std::vector<ClassLabel> out;
  const Graph k1_k2 = graph_from_edges(3, std::vector<Edge>{{1, 2}});
  if (others.empty() && cliques.size() == 2) {
    out.push_back({"K_p+K_q", cliques, "2K1", Graph(2), {cliques[0], cliques[1]}});
  } else if (others.empty() && cliques.size() == 3) {
    out.push_back({"K_p+K_q+K_r", cliques, "3K1", Graph(3), {cliques[0], cliques[1], cliques[2]}});
  } else if (others.size() == 1 && cliques.size() == 1) {
    const auto& o = others[0];
    const int p = cliques[0];
    if (o.kind == ComponentKind::kBiclique) {
      out.push_back({"K_p+K_q,r", {p, o.a, o.b}, "K1+K2", k1_k2, {p, -o.a, -o.b}});
    } else if (o.kind == ComponentKind::kSplit) {
      out.push_back({"K_p+CS_q,r", {p, o.a, o.b}, "K1+K2", k1_k2, {p, -o.a, o.b}});
    }
  }
  if (first_only && out.size() > 1) out.resize(1);
  return out;
}

std::vector<ClassLabel> run_classify(const Graph& g, bool first_only) {
  const Graph h = without_isolated(g);
  if (h.order() == 0) {
    return {{"edgeless", {g.order()}, "K1", Graph(1), {-g.order()}}};
  }
  if (!is_connected(h)) return classify_disconnected(h, first_only);

  const std::size_t classes = mixed_twin_classes(h).size();
  std::vector<ClassLabel> out;
  for (const auto& fam : families()) {
    if (classes > static_cast<std::size_t>(fam.base.order())) continue;
    const auto found = recognize_extension(h, fam.base, fam.pattern);
    for (const auto& t : orbit_representatives(fam.base, found)) {
      out.push_back(make_label(fam, t));
      if (first_only) return out;
    }
  }
  return out;
}

bool admissible_obstruction(const ForbiddenEntry& e) {
  const auto s = spectral_summary(e.graph);
  return e.obstruction == Obstruction::kTwoBelowMinusOne ? s.n_lt_neg1 >= 2 : s.n_pos >= 3;
}

}  // namespace

bool in_class_G(const Graph& g) {
  const auto t = trivial_multiplicities(g);
  return g.order() - t.m0 - t.m_neg1 <= 3;
}

Subclass subclass(const Graph& g) {
  Subclass s;
  s.in_G0 = g.order() > 0 && isolated_vertices(g) == 0;
  if (g.order() > 0 && is_connected(g)) {
    const auto t = trivial_multiplicities(g);
    if (g.order() - t.m0 - t.m_neg1 == 3) {
      const auto sum = spectral_summary(g);
      s.in_Gpp = sum.n_pos == 2 && sum.n_lt_neg1 == 1 && sum.n_between == 0;
    }
  }
  return s;
}

std::vector<ClassLabel> classify(const Graph& g) { return run_classify(g, false); }

bool has_classification(const Graph& g) { return !run_classify(g, true).empty(); }

void validate_forbidden_catalog() {
  for (const auto& e : forbidden_catalog()) {
    if (!admissible_obstruction(e)) {
      throw std::logic_error("forbidden catalog entry " + e.name + " lacks its spectral obstruction");
    }
  }
}

std::vector<ForbiddenWitness> forbidden_scan(const Graph& g) {
  static std::once_flag checked;
  std::call_once(checked, validate_forbidden_catalog);
  std::vector<ForbiddenWitness> out;
  for (const auto& e : forbidden_catalog()) {
    if (e.graph.order() > g.order()) continue;
    if (auto s = contains_induced(g, e.graph)) out.push_back({e.name, *s});
  }
  return out;
}

bool interlacing_admissible(const Graph& g) {
  const auto s = spectral_summary(g);
  return s.n_pos <= 2 && s.n_lt_neg1 <= 1;
}

std::vector<Graph> minimal_forbidden(int max_n, const GraphPredicate& predicate) {
  if (max_n < 1 || max_n > 7) throw std::invalid_argument("minimal_forbidden: max_n must be in 1..7");
  std::map<CanonicalForm, bool> memo;
  auto holds = [&](const Graph& g) {
    auto key = canonical_form(g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const bool value = predicate(g);
    memo.emplace(std::move(key), value);
    return value;
  };
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& h : connected_graphs(n)) {
      if (holds(h)) continue;
      bool minimal = true;
      const VertexSet all = h.vertices();
      for (VertexSet s = 1; s < all && minimal; ++s) minimal = holds(induced_subgraph(h, s));
      if (minimal) out.push_back(h);
    }
  }
  return out;
}

bool is_disjoint_union_of_cliques(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    for (int u : members(g.neighbors(v))) {
      if (g.closed_neighbors(u) != g.closed_neighbors(v)) return false;
    }
  }
  return true;
}

bool is_complete_multipartite(const Graph& g) {
  const Graph h = without_isolated(g);
  if (h.order() == 0) return false;
  return is_disjoint_union_of_cliques(complement(h));
}

}  // namespace mixspec
