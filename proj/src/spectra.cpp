#include "mixspec/spectra.hpp"

#include <array>
#include <string>

namespace mixspec {

std::vector<std::int64_t> adjacency_dense(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::int64_t> a(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0;
  }
  return a;
}

IntPoly adjacency_char_poly(const Graph& g) {
  return char_poly_dense(adjacency_dense(g), static_cast<std::size_t>(g.order()));
}

TrivialMultiplicities trivial_multiplicities(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  auto a = adjacency_dense(g);
  TrivialMultiplicities out;
  out.m0 = g.order() - rank_dense(a, n, n);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = 1;
  out.m_neg1 = g.order() - rank_dense(a, n, n);
  return out;
}

SpectralSummary spectral_summary(const Graph& g) {
  SpectralSummary s;
  s.order = g.order();
  if (g.order() == 0) return s;
  const auto trivial = trivial_multiplicities(g);
  s.m0 = trivial.m0;
  s.m_neg1 = trivial.m_neg1;

  const IntPoly cp = adjacency_char_poly(g);
  if (root_mult_at(cp, 0) != s.m0 || root_mult_at(cp, -1) != s.m_neg1) {
    throw ArithmeticError("spectral_summary: rank and characteristic polynomial disagree");
  }
  IntPoly q = cp.shifted_down(s.m0);
  const IntPoly x_plus_1 = IntPoly::linear_factor(-1);
  for (int i = 0; i < s.m_neg1; ++i) q = exact_quotient(q, x_plus_1);

  const RootCounter counter(q);
  s.n_pos = counter.count({Endpoint::open(0), Endpoint::pos_infinity()});
  s.n_lt_neg1 = counter.count({Endpoint::neg_infinity(), Endpoint::open(-1)});
  s.n_between = counter.count({Endpoint::open(-1), Endpoint::open(0)});
  if (s.m0 + s.m_neg1 + s.nontrivial() != s.order) {
    throw ArithmeticError("spectral_summary: eigenvalue census does not sum to the order");
  }
  return s;
}

bool interlacing_check(const Graph& host, VertexSet subset) {
  if ((subset & host.vertices()) == 0) throw GraphError("interlacing_check: empty vertex subset");
  const Graph sub = induced_subgraph(host, subset);
  const RootCounter big(adjacency_char_poly(host));
  const RootCounter small(adjacency_char_poly(sub));
  static constexpr std::array<std::array<int, 2>, 8> kThresholds{
      {{-2, 1}, {-3, 2}, {-1, 1}, {-1, 2}, {0, 1}, {1, 2}, {1, 1}, {2, 1}}};
  for (const auto& [num, den] : kThresholds) {
    const Interval above{Endpoint::open(num, den), Endpoint::pos_infinity()};
    const Interval below{Endpoint::neg_infinity(), Endpoint::open(num, den)};
    if (small.count(above) > big.count(above)) return false;
    if (small.count(below) > big.count(below)) return false;
  }
  return true;
}

}  // namespace mixspec
