#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "atomkit/theorems.hpp"

namespace atomkit {

inline constexpr std::size_t kExhaustiveOrderCap = 16;

struct SubsetFilter {
  std::size_t min_size = 1;
  std::size_t max_size = 0;  // 0: no bound
  bool must_contain_identity = false;
  bool must_generate = false;
};

enum class SweepMode { exhaustive, random };

struct SweepConfig {
  std::vector<Json> groups;  // descriptors, see io.hpp
  SubsetFilter filter;
  std::vector<TheoremId> theorems;
  std::vector<int> covering_k{3};
  SweepMode mode = SweepMode::exhaustive;
  std::size_t samples = 0;  // random mode, per group
  std::uint64_t seed = 0;   // random mode
  std::size_t exhaustive_cap = kExhaustiveOrderCap;
  Engine engine = Engine::mincut;
  std::filesystem::path output_path;  // empty: certificates are not written
  unsigned workers = 0;               // 0: hardware concurrency
};

// Accepted document:
//   {"groups": [<descriptor>...] | "default", "max_order": n,
//    "subset_filter": {"min_size", "max_size", "must_contain_identity", "must_generate"},
//    "theorems": ["olson_4_2", ...], "covering_k": [3],
//    "mode": "exhaustive" | "random", "samples": n, "seed": s,
//    "exhaustive_order_cap": 16, "engine": "mincut", "output_path": "...", "workers": 0}
// Throws InvalidConfig.
SweepConfig parse_sweep_config(const Json& doc);

struct VerdictCounts {
  std::size_t pass = 0;
  std::size_t hypothesis_not_met = 0;
  std::size_t violation = 0;
  std::size_t skipped = 0;  // inputs the statement does not apply to

  std::size_t certificates() const noexcept { return pass + hypothesis_not_met + violation; }
};

struct SweepReport {
  std::size_t groups = 0;
  std::size_t subsets_enumerated = 0;  // before the generation filter
  std::size_t subsets_kept = 0;
  std::size_t certificates = 0;
  // Keyed by theorem wire name; covering entries carry the k, e.g. "covering_4_1[k=3]".
  std::map<std::string, VerdictCounts> per_theorem;
  std::vector<Json> violations;  // the offending certificates, first few only
  double wall_seconds = 0.0;

  std::size_t violation_count() const noexcept;
};

inline constexpr std::size_t kReportedViolations = 20;

// Runs every configured verifier on every selected (group, subset). The
// certificate stream is ordered by (group position in the config, subset
// bitmask or sample index, theorem position, k) and does not depend on the
// number of workers.
SweepReport sweep(const SweepConfig& config);

Json sweep_report_to_json(const SweepReport& report);
std::string sweep_summary_table(const SweepReport& report);

}  // namespace atomkit
