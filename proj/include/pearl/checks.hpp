#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pearl {

/// Bounds for the named cross-check suites. Defaults match the documented
/// acceptance bounds.
struct CheckOptions {
  int oracle_max_genus = 3;
  std::int64_t oracle_max_d1d2 = 4;

  int cover_min_genus = 2;
  int cover_max_genus = 3;
  std::vector<std::pair<std::int64_t, std::int64_t>> cover_bidegrees = {{2, 2}, {2, 4}, {3, 3}};

  int primitive_max_genus = 4;
  int primitive_max_n = 8;
  int primitive_max_n_fls = 6;

  int specialize_max_genus = 4;
  int specialize_max_n = 8;

  std::vector<std::pair<int, std::int64_t>> quasimod_cases = {{2, 2}, {2, 3}, {3, 2}};
  int quasimod_max_n = 8;

  int codegree_max_genus = 5;
  std::int64_t codegree_max_n = 10;
};

struct CheckResult {
  std::string suite;
  bool pass = true;
  std::string report;           // deterministic multi-line text
  std::string counterexample;   // first failure, empty when pass
};

CheckResult check_oracle(const CheckOptions& opts = {});
CheckResult check_cover(const CheckOptions& opts = {});
CheckResult check_primitive(const CheckOptions& opts = {});
CheckResult check_specialize(const CheckOptions& opts = {});
CheckResult check_quasimod(const CheckOptions& opts = {});
CheckResult check_codegree(const CheckOptions& opts = {});

/// Runs the named suites ("all" expands to every suite) in a fixed order.
std::vector<CheckResult> run_checks(const std::vector<std::string>& names,
                                    const CheckOptions& opts = {});

}  // namespace pearl
