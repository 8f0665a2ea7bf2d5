#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mixspec/graph.hpp"

namespace mixspec {

inline constexpr const char* kToolVersion = "1.0.0";

struct VerifyConfig {
  int max_n = 8;
  int jobs = 1;
  std::optional<std::string> catalog;  // graph6 file replacing generation
};

struct VerifyCounts {
  long long examined = 0;
  long long spectral_members = 0;
  long long constructive_members = 0;
  long long discrepancies = 0;
};

struct OrderReport {
  int order = 0;
  VerifyCounts connected;
  VerifyCounts disconnected;  // no isolated vertices; catalog graphs with isolated vertices count here too
  double seconds = 0.0;
};

struct Discrepancy {
  std::string graph6;
  bool spectral = false;
  bool constructive = false;
};

/// Cross-checks the spectral membership test against the constructive classification
/// for every graph of each order. Counts and discrepancies do not depend on jobs.
struct VerifyReport {
  VerifyConfig config;
  std::vector<OrderReport> orders;
  std::vector<Discrepancy> discrepancies;

  long long total_examined() const;
};

/// Orders 2..max_n are generated (connected graphs and graphs without isolated vertices);
/// with a catalog, every listed graph of order <= max_n is checked as given.
/// Throws std::invalid_argument for max_n outside 1..10 or jobs < 1.
VerifyReport run_verification(const VerifyConfig& config, std::ostream* progress = nullptr);

/// Deterministic JSON; wall times are included only when `timings` is set.
std::string report_json(const VerifyReport& report, bool timings);

}  // namespace mixspec
