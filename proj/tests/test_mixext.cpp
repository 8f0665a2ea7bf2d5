#include <doctest.h>

#include <random>
#include <vector>

#include "mixspec/catalog.hpp"
#include "mixspec/enumerate.hpp"
#include "mixspec/graph6.hpp"
#include "mixspec/int_matrix.hpp"
#include "mixspec/isomorphism.hpp"
#include "mixspec/mixext.hpp"
#include "mixspec/spectra.hpp"
#include "oracles.hpp"

using namespace mixspec;

namespace {

Graph path(int n) { return named_graph("path", std::vector<int>{n}); }

IntPoly power(const IntPoly& p, int k) {
  IntPoly out{1};
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

/// char(expand) = char(Q) * x^(coclique excess) * (x+1)^(clique excess).
bool factorization_holds(const Graph& base, const ExtensionType& type) {
  int zeros = 0;
  int minus_ones = 0;
  for (int t : type) (t < 0 ? zeros : minus_ones) += std::abs(t) - 1;
  const IntPoly lhs = adjacency_char_poly(expand(base, type));
  const IntPoly rhs = char_poly(quotient_matrix(base, type)) * IntPoly::monomial(1, zeros) * power(IntPoly{1, 1}, minus_ones);
  return lhs == rhs;
}

}  // namespace

TEST_CASE("expansion examples") {
  const Graph k2 = named_graph("complete", std::vector<int>{2});
  const Graph k23 = expand(k2, ExtensionType{-2, -3});
  CHECK(is_isomorphic(k23, named_graph("complete_bipartite", std::vector<int>{2, 3})));
  CHECK(expanded_edge_count(k2, ExtensionType{-2, -3}) == 6);

  const Graph cs = expand(k2, ExtensionType{-2, 3});
  CHECK(cs.edge_count() == 3 + 6);

  const Graph k1(1);
  CHECK(expand(k1, ExtensionType{-4}).edge_count() == 0);
  CHECK(expand(k1, ExtensionType{4}).edge_count() == 6);

  const Graph pine = expand(path(3), ExtensionType{3, 1, -2});
  CHECK(write_graph6(pine) == "E~CO");
  // Cells are consecutive in base order.
  CHECK(pine.adjacent(0, 1));
  CHECK(pine.adjacent(2, 3));
  CHECK_FALSE(pine.adjacent(4, 5));
  CHECK(pine.adjacent(3, 5));
}

TEST_CASE("type validation") {
  const Graph k2 = named_graph("complete", std::vector<int>{2});
  CHECK_THROWS_AS(expand(k2, ExtensionType{1}), GraphError);
  CHECK_THROWS_AS(expand(k2, ExtensionType{0, 2}), GraphError);
  CHECK_THROWS_AS(expand(k2, ExtensionType{40, 30}), GraphError);
  CHECK(type_order(ExtensionType{3, -2, 1}) == 6);
}

TEST_CASE("quotient matrix entries") {
  const IntMatrix q = quotient_matrix(path(3), ExtensionType{3, 1, -2});
  CHECK(q == IntMatrix{{2, 1, 0}, {3, 0, 2}, {0, 1, 0}});
}

TEST_CASE("parse and format types") {
  CHECK(parse_type("3,.,-2") == ExtensionType{3, 1, -2});
  CHECK(parse_type("3,,-2") == ExtensionType{3, 1, -2});
  CHECK(parse_type(" 4 , -1 ") == ExtensionType{4, -1});
  CHECK(parse_type("") == ExtensionType{1});
  CHECK(format_type(ExtensionType{3, 1, -2}) == "(3,1,-2)");
  CHECK(normalized(ExtensionType{-1, 2, 1}) == ExtensionType{1, 2, 1});

  try {
    parse_type("3,0");
    FAIL("zero accepted");
  } catch (const TypeParseError& e) {
    CHECK(e.position() == 2);
  }
  try {
    parse_type("3,x,1");
    FAIL("letter accepted");
  } catch (const TypeParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_type("99999999999"), TypeParseError);
}

TEST_CASE("characteristic polynomial factors through the quotient") {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> size(1, 3);
  std::bernoulli_distribution sign(0.5);
  GraphCatalog catalog;
  int checked = 0;
  for (int k = 1; k <= 5; ++k) {
    for (const Graph& base : catalog.connected(k).graphs) {
      for (int trial = 0; trial < (k <= 3 ? 40 : 8); ++trial) {
        ExtensionType type;
        for (int i = 0; i < k; ++i) type.push_back(sign(rng) ? size(rng) : -size(rng));
        CHECK(factorization_holds(base, type));
        ++checked;
      }
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("small bases stay inside the spectral class") {
  // A base of order <= 3 gives a quotient of order <= 3, so at most three
  // eigenvalues avoid {0, -1}.
  GraphCatalog catalog;
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> size(1, 4);
  std::bernoulli_distribution sign(0.5);
  for (int k = 1; k <= 3; ++k) {
    for (const Graph& base : catalog.connected(k).graphs) {
      for (int trial = 0; trial < 30; ++trial) {
        ExtensionType type;
        for (int i = 0; i < k; ++i) type.push_back(sign(rng) ? size(rng) : -size(rng));
        CHECK(spectral_summary(expand(base, type)).nontrivial() <= 3);
      }
    }
  }
}

TEST_CASE("trivial types reproduce the base") {
  GraphCatalog catalog;
  for (int k = 1; k <= 5; ++k) {
    for (const Graph& base : catalog.connected(k).graphs) {
      const ExtensionType ones(static_cast<std::size_t>(k), 1);
      CHECK(expand(base, ones) == base);
    }
  }
}

TEST_CASE("reversing a path base mirrors the type") {
  const Graph p4 = path(4);
  CHECK(is_isomorphic(expand(p4, ExtensionType{2, -3, 1, 4}), expand(p4, ExtensionType{4, 1, -3, 2})));
  CHECK_FALSE(is_isomorphic(expand(p4, ExtensionType{2, -3, 1, 4}), expand(p4, ExtensionType{4, -3, 1, 2})));
}
