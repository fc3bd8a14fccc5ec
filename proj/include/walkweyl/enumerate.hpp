#ifndef WALKWEYL_ENUMERATE_HPP
#define WALKWEYL_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "walkweyl/laurent.hpp"

namespace walkweyl {

/// Half-plane constraint on lattice points: normal . p > rhs (or >= rhs).
struct HalfPlane {
  Point normal;
  Int rhs = 0;
  bool strict = true;

  bool contains(Point p) const {
    Int v = dot(normal, p);
    return strict ? v > rhs : v >= rhs;
  }
};

/// Confinement region for walks. Every partial sum of a confined walk,
/// including both endpoints, must satisfy the region predicate.
class Region {
 public:
  enum class Kind { Free, OpenQuadrant, ClosedQuadrant, Sector };

  static Region free();
  static Region open_quadrant();
  static Region closed_quadrant();
  static Region sector(std::vector<HalfPlane> bounds,
                       std::string label = "sector");

  Kind kind() const { return kind_; }
  bool contains(Point p) const;
  const std::string& name() const { return name_; }
  const std::vector<HalfPlane>& bounds() const { return bounds_; }

 private:
  Kind kind_ = Kind::Free;
  std::string name_ = "free";
  std::vector<HalfPlane> bounds_;
};

/// Parses the CLI region flags: free | qp | closed.
Region parse_region(std::string_view flag);

/// One Pascal slice: every endpoint count at a fixed length t.
struct CountTable {
  Int t = 0;
  Point start{};
  std::string region = "free";
  std::map<Point, BigInt> counts;

  BigInt total() const;
  BigInt at(Point p) const;
};

BigInt free_count(const StepSet& s, Point a, Point b, Int t);

using MultiplicityVector = std::vector<Int>;

/// All nonnegative integer solutions of
///   sum_i n_i * step_i = displacement,  sum_i n_i = t,
/// one entry per step in step-list order. Full-rank three-step systems are
/// solved directly; a rank-deficient system enumerates its bounded free
/// parameter; anything wider falls back to pruned enumeration.
std::vector<MultiplicityVector> step_multiplicities(const StepSet& s,
                                                    Point displacement, Int t);

BigInt multinomial(Int t, std::span<const Int> parts);

/// Closed-form free count: sum of t!/(n_1! ... n_k!) over step_multiplicities.
BigInt free_count_multinomial(const StepSet& s, Point a, Point b, Int t);

/// Number of t-paths a -> b whose every partial sum (and both endpoints)
/// lies in the region. Endpoints outside the region yield 0, not an error.
BigInt region_count(const StepSet& s, Point a, Point b, Int t, const Region& r);

CountTable pascal_slice(const StepSet& s, Point a, Int t, const Region& r);

/// All slices 0..t_max from one DP run.
std::vector<CountTable> pascal_slices(const StepSet& s, Point a, Int t_max,
                                      const Region& r);

struct BruteForceOptions {
  std::uint64_t cap = 1'000'000;  // maximum |S|^t sequences to enumerate
};

using PathVisitor = std::function<void(std::span<const Point> steps, Point end)>;

/// Explicit enumeration of every step sequence, filtered by the region.
/// Visits each surviving path (when a visitor is given) and returns the count.
/// Throws std::invalid_argument when |S|^t exceeds the cap.
BigInt brute_force_paths(const StepSet& s, Point a, Int t, const Region& r,
                         const PathVisitor& visit = {},
                         BruteForceOptions opt = {});

/// CSV with header "x,y,count", rows sorted lexicographically by (x, y).
std::string to_csv(const CountTable& table);

/// {"t":..,"start":[a,b],"region":"..","counts":[[x,y,"count"],..]} with
/// counts as decimal strings.
nlohmann::ordered_json to_json(const CountTable& table);

}  // namespace walkweyl

#endif  // WALKWEYL_ENUMERATE_HPP
