#include "mixspec/verify.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <json.hpp>
#include <ostream>
#include <stdexcept>

#include "mixspec/classify.hpp"
#include "mixspec/enumerate.hpp"
#include "mixspec/graph6.hpp"
#include "mixspec/parallel.hpp"

namespace mixspec {

namespace {

struct ChunkResult {
  VerifyCounts counts;
  std::vector<Discrepancy> discrepancies;
};

VerifyCounts check_graphs(const std::vector<Graph>& graphs, int jobs, std::vector<Discrepancy>& discrepancies) {
  const auto ranges = chunk_ranges(graphs.size(), jobs);
  std::vector<ChunkResult> results(ranges.size());
  for_each_chunk(graphs.size(), jobs, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    ChunkResult& r = results[chunk];
    for (std::size_t i = begin; i < end; ++i) {
      const Graph& g = graphs[i];
      const bool spectral = in_class_G(g);
      const bool constructive = has_classification(g);
      ++r.counts.examined;
      r.counts.spectral_members += spectral;
      r.counts.constructive_members += constructive;
      if (spectral != constructive) {
        ++r.counts.discrepancies;
        r.discrepancies.push_back({write_graph6(g), spectral, constructive});
      }
    }
  });
  VerifyCounts total;
  for (auto& r : results) {
    total.examined += r.counts.examined;
    total.spectral_members += r.counts.spectral_members;
    total.constructive_members += r.counts.constructive_members;
    total.discrepancies += r.counts.discrepancies;
    for (auto& d : r.discrepancies) discrepancies.push_back(std::move(d));
  }
  return total;
}

nlohmann::ordered_json counts_json(const VerifyCounts& c) {
  nlohmann::ordered_json j;
  j["examined"] = c.examined;
  j["spectral_members"] = c.spectral_members;
  j["constructive_members"] = c.constructive_members;
  j["discrepancies"] = c.discrepancies;
  return j;
}

}  // namespace

long long VerifyReport::total_examined() const {
  long long total = 0;
  for (const auto& o : orders) total += o.connected.examined + o.disconnected.examined;
  return total;
}

VerifyReport run_verification(const VerifyConfig& config, std::ostream* progress) {
  if (config.max_n < 1 || config.max_n > kMaxEnumerationOrder) {
    throw std::invalid_argument("verify: max-n must be in 1.." + std::to_string(kMaxEnumerationOrder));
  }
  if (config.jobs < 1) throw std::invalid_argument("verify: jobs must be positive");
  VerifyReport report;
  report.config = config;

  std::map<int, std::pair<std::vector<Graph>, std::vector<Graph>>> by_order;
  if (config.catalog) {
    std::ifstream in(*config.catalog);
    if (!in) throw std::runtime_error("cannot open catalog " + *config.catalog);
    for (Graph& g : read_graph6_stream(in)) {
      if (g.order() > config.max_n) continue;
      auto& slot = by_order[g.order()];
      (is_connected(g) ? slot.first : slot.second).push_back(std::move(g));
    }
  }

  GraphCatalog catalog(config.jobs);
  const int first = config.catalog ? 1 : 2;
  for (int n = first; n <= config.max_n; ++n) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Graph> connected;
    std::vector<Graph> disconnected;
    if (config.catalog) {
      auto it = by_order.find(n);
      if (it == by_order.end()) continue;
      connected = std::move(it->second.first);
      disconnected = std::move(it->second.second);
    } else {
      connected = catalog.connected(n).graphs;
      for (Graph& g : catalog.without_isolated(n)) {
        if (!is_connected(g)) disconnected.push_back(std::move(g));
      }
    }
    OrderReport order;
    order.order = n;
    order.connected = check_graphs(connected, config.jobs, report.discrepancies);
    order.disconnected = check_graphs(disconnected, config.jobs, report.discrepancies);
    order.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (progress != nullptr) {
      *progress << "order " << n << ": " << order.connected.examined << " connected, " << order.disconnected.examined
                << " disconnected, " << order.connected.discrepancies + order.disconnected.discrepancies
                << " discrepancies, " << order.seconds << " s\n";
    }
    report.orders.push_back(order);
  }
  return report;
}

std::string report_json(const VerifyReport& report, bool timings) {
  nlohmann::ordered_json j;
  j["tool"] = "mixspec";
  j["version"] = kToolVersion;
  nlohmann::ordered_json config;
  config["max_n"] = report.config.max_n;
  config["catalog"] = report.config.catalog ? nlohmann::ordered_json(*report.config.catalog) : nlohmann::ordered_json();
  j["config"] = config;
  nlohmann::ordered_json orders = nlohmann::ordered_json::array();
  long long discrepancies = 0;
  for (const auto& o : report.orders) {
    nlohmann::ordered_json entry;
    entry["order"] = o.order;
    entry["connected"] = counts_json(o.connected);
    entry["disconnected"] = counts_json(o.disconnected);
    if (timings) entry["seconds"] = o.seconds;
    orders.push_back(entry);
    discrepancies += o.connected.discrepancies + o.disconnected.discrepancies;
  }
  j["orders"] = orders;
  j["total_examined"] = report.total_examined();
  j["total_discrepancies"] = discrepancies;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& d : report.discrepancies) {
    list.push_back({{"graph6", d.graph6}, {"spectral", d.spectral}, {"constructive", d.constructive}});
  }
  j["discrepancies"] = list;
  return j.dump(2) + "\n";
}

}  // namespace mixspec
