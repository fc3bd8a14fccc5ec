#ifndef WALKWEYL_CLAIMS_HPP
#define WALKWEYL_CLAIMS_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "walkweyl/orbitsum.hpp"

namespace walkweyl {

struct ClaimsOptions {
  Int t_max = 8;
  PointRange a_range{1, 4, 1, 4};
  PointRange b_range{1, 4, 1, 4};
  PointRange control_range{1, 5, 1, 5};  // simple-walk positive control
};

/// One adjudicated claim. Status is "pass", "fail" or "disputed"; disputed
/// claims never fail a run, they record the measured outcome.
struct Claim {
  std::string id;
  std::string description;
  std::string status;
  nlohmann::ordered_json details;
};

struct ClaimsReport {
  nlohmann::ordered_json json;    // full deterministic report
  std::vector<Claim> claims;
  bool all_passed = true;         // no claim has status "fail"
  std::vector<std::string> failures;

  /// "PASS <id>" / "FAIL <id>" / "DISPUTED <id>" lines in claim order.
  std::vector<std::string> lines() const;
};

/// Runs the whole verification battery: oracle equivalence, group structure,
/// geometry, chamber decomposition, affine slice invariance, orbit-sum
/// comparisons, and the discrepancy log. Deterministic output.
ClaimsReport build_claims_report(const ClaimsOptions& opt = {});

}  // namespace walkweyl

#endif  // WALKWEYL_CLAIMS_HPP
