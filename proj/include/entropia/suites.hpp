#pragma once

// Named verification suites behind `entropia verify <suite>`. Each suite
// sweeps or samples its inputs, counts checks and collects violations.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entropia/arith.hpp"
#include "entropia/laws.hpp"
#include "entropia/numfield.hpp"

namespace entropia {

struct SuiteOptions {
  std::optional<std::uint64_t> max;  // suite-specific range bound
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultEnumerationCap;
};

struct SuiteResult {
  std::string name;
  std::uint64_t max = 0;  // effective range bound
  std::uint64_t seed = 0;
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<std::string> violations;  // first kMaxReportedViolations
  std::map<std::string, double> metrics;
  std::optional<ScanSummary> scan;

  bool ok() const { return violation_count == 0; }
  void violation(std::string what);
};

/// The fields covered by the splitting sweeps: quadratic d in
/// {-1, +-2, +-3, 5, -5, 13}, cyclotomic l in {3, 5, 7, 11, 13} and pure cubic
/// m in {2, 3, 5, 7}.
std::vector<FieldSpec> field_test_matrix();

/// Every raw pattern with 3 <= g <= max_g, each e_i in {1, 2} and f_i = 1.
std::vector<SplittingPattern> corollary_ideal_shapes(std::size_t max_g);

/// Suite names in a fixed order.
const std::vector<std::string>& suite_names();

/// Throws std::domain_error for an unknown suite and std::range_error for a
/// bound above the suite's limit.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace entropia
