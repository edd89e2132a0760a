#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hk/json_io.hpp"

namespace hk {

/// Parameters of a verification run.  Identical configs give identical
/// reports.
struct SuiteConfig {
  std::vector<std::string> presets;  // empty: every preset
  std::uint64_t seed = 1;
  int samples = 0;                   // 0: the suite's default count
  int max_terms = 6;                 // random elements
  int box = 3;                       // |mu|_inf bound for random elements
  std::string orientation = "auto";  // "auto", "as-written" or "mirrored"

  std::vector<std::string> preset_list() const;
  /// The orientation used for parabolic opposition and the twisted Jacquet
  /// action; "auto" resolves to the assignment found by the convention
  /// suite.
  Orientation parabolic_orientation() const;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  json detail;  // per-preset counts, first witness on failure
};

/// Every suite name, in a fixed order.  "bernstein" is an alias of
/// "presentation".
std::vector<std::string> suite_names();
/// Throws InputError on an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

/// For each side-sensitive identity, which variants hold on each preset,
/// and the variant that holds uniformly (if one does).
struct ConventionReport {
  struct Identity {
    std::string name;
    std::vector<std::string> variants;
    std::vector<std::pair<std::string, std::vector<std::string>>> passing;  // preset -> variants
    std::optional<std::string> global;
  };
  std::vector<Identity> identities;
  bool consistent() const;
  json to_json() const;
};
ConventionReport convention_report(const SuiteConfig& cfg);

/// Seed for one (suite, preset) pair, independent of run order.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& suite, const std::string& preset);

}  // namespace hk
