#ifndef WALKWEYL_CHAMBER_HPP
#define WALKWEYL_CHAMBER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walkweyl/isometry.hpp"

namespace walkweyl {

using ReflectionLine = LineEq;

/// Fixed lines of all order-2, det -1 elements of the group, deduplicated and
/// sorted. Offsets stay symbolic in t.
std::vector<ReflectionLine> reflection_arrangement(const IsometryGroup& g);

/// The open regions cut out by a line arrangement. Central arrangements
/// (all lines through the origin) are decomposed into cones listed in
/// counterclockwise ray order; affine arrangements are instantiated at a
/// fixed t and decomposed into sign-vector cells.
class SectorDecomposition {
 public:
  static SectorDecomposition build(std::vector<ReflectionLine> lines,
                                   Int t = 0);

  bool central() const { return central_; }
  Int t() const { return t_; }
  const std::vector<ReflectionLine>& lines() const { return lines_; }
  std::size_t sector_count() const;

  /// Counterclockwise boundary rays (central case only).
  const std::vector<Point>& rays() const { return rays_; }
  std::pair<Point, Point> sector_rays(std::size_t i) const;
  /// An integer direction strictly inside sector i (central case only).
  Point sample_direction(std::size_t i) const;

  bool sector_contains(std::size_t i, Point p) const;
  /// Index of the unique sector containing p, or nullopt if p lies on a line.
  std::optional<std::size_t> sector_of(Point p) const;

  /// The sector as a confinement region for walk counting.
  Region sector_region(std::size_t i) const;

 private:
  std::vector<ReflectionLine> lines_;
  bool central_ = true;
  Int t_ = 0;
  std::vector<Point> rays_;  // central case, ccw order
  // Affine case: per-line instantiated integer constraints a*x + b*y - c,
  // and the realizable sign vectors.
  struct ScaledLine {
    Point normal;
    Int rhs = 0;
  };
  std::vector<ScaledLine> scaled_;
  std::vector<std::vector<int>> cells_;
  std::vector<int> signs_at(Point p) const;
};

SectorDecomposition sectors(const std::vector<ReflectionLine>& lines,
                            Int t = 0);

struct QuarterPlaneReport {
  bool affine = false;
  /// Number of sectors meeting the open quadrant; nullopt for affine
  /// arrangements (not a finite union of chambers).
  std::optional<std::size_t> chamber_count;
  std::vector<ReflectionLine> internal_walls;  // lines crossing the open quadrant
  bool exact_match = false;  // the open quadrant is exactly one sector
};

QuarterPlaneReport classify_quarter_plane(const SectorDecomposition& dec);

/// Per-wall pairing data for the orbit-sum preconditions.
struct WallCheck {
  Point normal;
  std::vector<Rational> products;  // <alpha, s> for each step, in step order
  Rational k = 0;                  // common magnitude of the nonzero products
  std::vector<Point> zero_steps;   // steps pairing to zero with this wall
  bool ok_with_zeros = false;      // nonzero products all have magnitude k
  bool ok_strict = false;          // additionally, no zero products
};

struct GzPreconditionReport {
  bool cond_i = true;  // lattice invariance (automatic for integer matrices)
  std::string cond_i_note;
  bool cond_ii = false;  // step set invariant under every element
  std::optional<std::size_t> cond_ii_witness;  // element index on failure
  bool cond_iii = false;         // two-value pattern, zero products tolerated
  bool cond_iii_strict = false;  // strict two-value pattern
  std::vector<WallCheck> walls;

  bool all_ok() const { return cond_i && cond_ii && cond_iii; }
};

/// Checks the reflectability preconditions of the signed orbit sum for a
/// group, step set, bilinear pairing and choice of wall normals.
GzPreconditionReport gz_precondition_report(
    const IsometryGroup& g, const StepSet& s, const SymMat& form,
    const std::vector<Point>& wall_normals);

nlohmann::ordered_json to_json(const QuarterPlaneReport& report);
nlohmann::ordered_json to_json(const GzPreconditionReport& report);

}  // namespace walkweyl

#endif  // WALKWEYL_CHAMBER_HPP
