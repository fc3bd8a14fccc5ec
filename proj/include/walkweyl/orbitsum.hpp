#ifndef WALKWEYL_ORBITSUM_HPP
#define WALKWEYL_ORBITSUM_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "walkweyl/enumerate.hpp"
#include "walkweyl/isometry.hpp"

namespace walkweyl {

/// Signed orbit sum over the group: sum_g sign(g) * Free_t(g(a) -> b).
/// Negative values are possible (and diagnostic). Throws when the group is
/// flagged infinite: affine groups contribute through an explicitly chosen
/// finite element list.
BigInt orbit_sum_count(const IsometryGroup& g, const StepSet& s, Point a,
                       Point b, Int t);

/// Slice-level form: sum_g sign(g) * free_gf_slice(S, g(a), t). The
/// coefficient at b equals orbit_sum_count(..., b, ...).
LaurentPoly orbit_sum_slice(const IsometryGroup& g, const StepSet& s, Point a,
                            Int t);

struct PointRange {
  Int x_min = 1, x_max = 4;
  Int y_min = 1, y_max = 4;

  bool contains(Point p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
  std::size_t size() const {
    return static_cast<std::size_t>(x_max - x_min + 1) *
           static_cast<std::size_t>(y_max - y_min + 1);
  }
};

struct Counterexample {
  Int t = 0;
  Point a{};
  Point b{};
  BigInt orbit;
  BigInt oracle;
};

struct EqualityReport {
  std::string model;
  std::string group;  // paper | search | custom
  std::string region;
  PointRange a_range;
  PointRange b_range;
  Int t_max = 0;
  bool equal = false;
  /// Minimal in lexicographic (t, a, b) order over the scanned range.
  std::optional<Counterexample> counterexample;
  std::uint64_t scanned = 0;
  std::int64_t elapsed_ms = 0;
};

/// Exhaustively compares orbit_sum_count against region_count over
/// t = 0..t_max, a in a_range, b in b_range (lexicographic scan order).
/// Parallelized over start points; the result is order-independent.
EqualityReport compare_orbit_vs_oracle(const IsometryGroup& g, const StepSet& s,
                                       const Region& region, PointRange a_range,
                                       PointRange b_range, Int t_max,
                                       std::string model_tag = "custom",
                                       std::string group_tag = "custom");

/// Thread budget: WALKWEYL_THREADS when set (>= 1), else all cores.
unsigned thread_budget();

nlohmann::ordered_json to_json(const EqualityReport& report,
                               bool include_elapsed = true);

}  // namespace walkweyl

#endif  // WALKWEYL_ORBITSUM_HPP
