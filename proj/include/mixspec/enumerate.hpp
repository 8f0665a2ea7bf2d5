#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "mixspec/graph.hpp"
#include "mixspec/isomorphism.hpp"

namespace mixspec {

inline constexpr int kMaxEnumerationOrder = 10;

/// One representative per isomorphism class, each stored in canonical labeling,
/// sorted by ascending canonical key.
struct GenerationLevel {
  int order = 0;
  std::vector<Graph> graphs;
  std::vector<CanonicalForm> keys;
};

/// Connected graphs of order n+1 obtained by joining a new vertex to every nonempty
/// vertex subset of every parent, deduplicated by canonical form.
GenerationLevel extend_connected(const GenerationLevel& parent, int jobs = 1);

std::vector<Graph> connected_graphs(int n, int jobs = 1);
std::vector<Graph> graphs_without_isolated(int n, int jobs = 1);
/// Every graph of order n (isolated vertices allowed), 1 <= n <= 10.
std::vector<Graph> all_graphs(int n, int jobs = 1);

/// Caches connected levels so that repeated queries at increasing orders share work.
class GraphCatalog {
 public:
  explicit GraphCatalog(int jobs = 1) : jobs_(jobs) {}

  const GenerationLevel& connected(int n);
  std::vector<Graph> without_isolated(int n);
  std::vector<Graph> all(int n);

 private:
  int jobs_;
  std::mutex mutex_;
  std::map<int, std::unique_ptr<GenerationLevel>> levels_;
};

}  // namespace mixspec
