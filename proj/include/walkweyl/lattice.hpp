#ifndef WALKWEYL_LATTICE_HPP
#define WALKWEYL_LATTICE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace walkweyl {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point of the integer lattice Z x Z.
struct Point {
  Int x = 0;
  Int y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
  constexpr Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  constexpr Point operator-(Point o) const { return {x - o.x, y - o.y}; }
  constexpr Point operator-() const { return {-x, -y}; }
  constexpr Point operator*(Int k) const { return {x * k, y * k}; }
};

// z-component of the cross product; the workhorse of all exact orientation tests.
constexpr Int cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
constexpr Int dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr Int inf_norm(Point p) {
  Int ax = p.x < 0 ? -p.x : p.x;
  Int ay = p.y < 0 ? -p.y : p.y;
  return ax > ay ? ax : ay;
}

/// Divides a nonzero vector by the gcd of its entries, preserving direction.
Point primitive_ray(Point d);

std::string to_string(Point p);

struct RationalPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

enum class Model { ReverseKreweras, Kreweras, Gessel, MishnaRechnitzer, Simple };

std::optional<Model> parse_model(std::string_view tag);
std::string model_name(Model m);
const std::vector<Model>& all_models();

/// An ordered list of pairwise distinct lattice steps, optionally carrying a
/// model tag. Emptiness is permitted so that degenerate inputs (e.g. the zero
/// step generating function) stay representable; operations that need steps
/// check for themselves.
class StepSet {
 public:
  StepSet() = default;
  explicit StepSet(std::vector<Point> steps,
                   std::optional<Model> model = std::nullopt);

  const std::vector<Point>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  std::optional<Model> model() const { return model_; }
  std::string name() const;
  bool contains(Point s) const;
  std::optional<std::size_t> index_of(Point s) const;
  Int max_step_norm() const;

  friend bool operator==(const StepSet& a, const StepSet& b) {
    return a.steps_ == b.steps_;
  }

 private:
  std::vector<Point> steps_;
  std::optional<Model> model_;
};

StepSet named_step_set(Model m);
/// Throws std::invalid_argument naming the valid tags for an unknown tag.
StepSet named_step_set(std::string_view tag);

/// Parses the custom step set text format "1,0;0,1;-1,-1" (whitespace ignored).
StepSet parse_step_set(std::string_view text);

/// True when every step (a,b) satisfies a^2 + b^2 <= 2.
bool all_short_steps(const StepSet& s);

enum class RegionTag { Interior, XBoundary, YBoundary, BothBoundaries, Exterior };

RegionTag classify_point(Point p);
std::string region_tag_name(RegionTag tag);

/// Componentwise mean of the steps, exact. Throws on an empty step set.
RationalPoint barycenter(const StepSet& s);
RationalPoint drift(const StepSet& s, Int t);

std::string to_string(const Rational& r);

}  // namespace walkweyl

#endif  // WALKWEYL_LATTICE_HPP
