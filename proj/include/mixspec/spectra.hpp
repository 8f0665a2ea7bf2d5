#pragma once

#include <cstdint>
#include <vector>

#include "mixspec/graph.hpp"
#include "mixspec/int_matrix.hpp"
#include "mixspec/int_poly.hpp"

namespace mixspec {

/// Exact census of the adjacency eigenvalues, counted with multiplicity.
struct SpectralSummary {
  int order = 0;
  int m0 = 0;         // eigenvalue 0
  int m_neg1 = 0;     // eigenvalue -1
  int n_pos = 0;      // (0, inf)
  int n_lt_neg1 = 0;  // (-inf, -1)
  int n_between = 0;  // (-1, 0)

  int nontrivial() const { return n_pos + n_lt_neg1 + n_between; }
  friend bool operator==(const SpectralSummary&, const SpectralSummary&) = default;
};

std::vector<std::int64_t> adjacency_dense(const Graph& g);
IntPoly adjacency_char_poly(const Graph& g);

/// Multiplicities of 0 and -1 from the ranks of A and A + I.
struct TrivialMultiplicities {
  int m0 = 0;
  int m_neg1 = 0;
};
TrivialMultiplicities trivial_multiplicities(const Graph& g);

/// Throws ArithmeticError if the rank-based multiplicities disagree with the
/// characteristic polynomial.
SpectralSummary spectral_summary(const Graph& g);

/// Necessary condition from Cauchy interlacing, tested at the thresholds
/// -2, -3/2, -1, -1/2, 0, 1/2, 1, 2. Throws GraphError for an empty subset.
bool interlacing_check(const Graph& host, VertexSet subset);

}  // namespace mixspec
