#ifndef RLW_VERIFY_HPP
#define RLW_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rlw/catalog.hpp"

namespace rlw {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // witness on failure, optional note on pass
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

/// Each suite walks the catalog up to `size_max` and re-proves the
/// corresponding module's invariants from first principles (independent
/// partition scans, open-set scans, antichain scans). Failures carry
/// witnesses; internal theorem assertions that throw are converted into
/// failing checks.
SuiteResult run_filters_suite(const AlgebraCatalog& cat, int size_max, int jobs = 1);
SuiteResult run_topology_suite(const AlgebraCatalog& cat, int size_max, int jobs = 1);
SuiteResult run_limits_suite(const AlgebraCatalog& cat, int size_max, std::uint64_t seed,
                             int jobs = 1);
SuiteResult run_analysis_suite(const AlgebraCatalog& cat, int size_max, int jobs = 1);

/// which: filters | topology | limits | analysis | all.
std::vector<SuiteResult> run_suites(const AlgebraCatalog& cat, const std::string& which,
                                    int size_max, std::uint64_t seed, int jobs = 1);

/// Congruences found by scanning every partition of the carrier, with
/// compatibility checked pointwise; independent of the filter
/// correspondence.
std::vector<CongruenceRelation> congruences_by_partition_scan(const ResiduatedLattice& A);

}  // namespace rlw

#endif
