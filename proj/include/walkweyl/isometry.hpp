#ifndef WALKWEYL_ISOMETRY_HPP
#define WALKWEYL_ISOMETRY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "walkweyl/enumerate.hpp"
#include "walkweyl/lattice.hpp"

namespace walkweyl {

/// 2x2 integer matrix, row-major.
struct Mat2 {
  Int m00 = 1, m01 = 0;
  Int m10 = 0, m11 = 1;

  friend constexpr auto operator<=>(const Mat2&, const Mat2&) = default;
  constexpr Int det() const { return m00 * m11 - m01 * m10; }
  constexpr Mat2 transpose() const { return {m00, m10, m01, m11}; }
  static constexpr Mat2 identity() { return {}; }

  constexpr Mat2 operator*(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
  }
};

/// Row vector times matrix.
constexpr Point apply_row(Point p, const Mat2& m) {
  return {p.x * m.m00 + p.y * m.m10, p.x * m.m01 + p.y * m.m11};
}

/// Lattice isometry p |-> p*M + c + t*tau (row-vector convention). The
/// translation part may depend linearly on the slice length t, which is how
/// the affine symmetries of drifting models are carried around.
struct AffineIsometry {
  Mat2 m;
  Point c{};    // constant translation
  Point tau{};  // per-t translation

  friend constexpr auto operator<=>(const AffineIsometry&,
                                    const AffineIsometry&) = default;
  bool is_linear() const { return c == Point{} && tau == Point{}; }
  bool is_identity() const { return is_linear() && m == Mat2::identity(); }

  static AffineIsometry identity() { return {}; }
  /// Throws std::invalid_argument unless det(m) is +1 or -1.
  static AffineIsometry linear(Mat2 m);
  static AffineIsometry affine(Mat2 m, Point c, Point tau);
};

Point apply_isometry(const AffineIsometry& g, Point p, Int t = 0);

/// g first, then h. Matrix part is M_g * M_h under the row-vector action.
AffineIsometry compose(const AffineIsometry& g, const AffineIsometry& h);
AffineIsometry inverse(const AffineIsometry& g);

/// Least k <= cap with g^k = identity, or nullopt (order exceeds the cap).
std::optional<Int> element_order(const AffineIsometry& g, Int cap);

/// Determinant of the linear part: the orbit-sum sign (-1)^{l(g)}.
Int sign_of(const AffineIsometry& g);

bool is_reflection(const AffineIsometry& g);

/// Line a*x + b*y = c0 + ct*t in canonical form: integer (a,b) reduced and
/// sign-normalized (a > 0, or a == 0 and b > 0), exact rational offsets.
struct LineEq {
  Point normal;
  Rational c0 = 0;
  Rational ct = 0;

  Rational offset_at(Int t) const { return c0 + ct * t; }
  bool contains(Point p, Int t = 0) const;
  bool is_central() const { return c0 == 0 && ct == 0; }
  friend bool operator==(const LineEq&, const LineEq&) = default;
  std::string to_string() const;
};

struct FixedSet {
  enum class Kind { WholePlane, Line, FixedPoint, Empty };
  Kind kind = Kind::WholePlane;
  std::optional<LineEq> line;
  // Fixed point p(t) = point0 + t * point_t, exact.
  std::optional<RationalPoint> point0;
  std::optional<RationalPoint> point_t;
};

/// Exact solution set of p*M + c + t*tau = p over the rational plane,
/// symbolic in t.
FixedSet fixed_set(const AffineIsometry& g);

/// Primitive left eigenvector d with d*M = -d, sign-normalized to
/// (y > 0) or (y == 0 and x > 0). Throws unless g is a reflection.
Point reflection_direction(const AffineIsometry& g);
/// Same for eigenvalue +1 (the fixed-line direction).
Point axis_direction(const AffineIsometry& g);

struct GroupCaps {
  std::size_t max_elements = 10'000;
  Int max_translation_norm = 1'000;  // on max(|c|_inf, |tau|_inf)
};

struct IsometryGroup {
  std::vector<AffineIsometry> elements;  // identity first, rest sorted
  std::vector<AffineIsometry> generators;
  bool finite = true;
  std::optional<AffineIsometry> cap_witness;  // element that tripped a cap

  std::size_t order() const { return elements.size(); }
  bool contains(const AffineIsometry& g) const;
};

/// Closure of the generators under composition and inverse. Stops with
/// finite = false and a witness when either cap is exceeded.
IsometryGroup generate_group(const std::vector<AffineIsometry>& generators,
                             GroupCaps caps = {});

/// Wraps an explicit element list (assumed closed; identity is added).
IsometryGroup group_from_elements(std::vector<AffineIsometry> elements);

/// r1^2 = e, r2^2 = e and r1*r2 of order exactly n.
bool dihedral_presentation_check(const AffineIsometry& r1,
                                 const AffineIsometry& r2, Int n);

struct Permutation {
  std::vector<std::size_t> images;  // index i maps to images[i]

  bool is_identity() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
  std::string cycle_string() const;  // e.g. "(1 3)" with 1-based labels
};

/// The permutation s |-> s*M of the step list when it exists (linear part
/// only; translations do not act on steps).
std::optional<Permutation> step_set_permutation(const AffineIsometry& g,
                                                const StepSet& s);

struct InvarianceWitness {
  Int t = 0;
  Point b{};
};

/// Checks F_t(b) = F_t(g(b)) on every slice t = 1..t_max. Returns the
/// minimal (t, b lexicographic) witness on failure, nullopt on success.
std::optional<InvarianceWitness> counts_invariance_check(
    const AffineIsometry& g, const StepSet& s, Int t_max);

/// Exact affine form q_a*a + q_b*b + q_t*t + q_1.
struct AffineForm {
  Rational a = 0, b = 0, t = 0, one = 0;
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// Multiplicity of each step as an affine function of (endpoint, t); only
/// defined for three-step sets whose system has full rank. Throws otherwise.
std::vector<AffineForm> multiplicity_forms(const StepSet& s);

/// Permutation pi with n_i(g(p), t) = n_{pi(i)}(p, t) as exact functions,
/// or nullopt when the forms are not permuted. Throws (directing callers to
/// counts_invariance_check) when the multiplicity system is not full rank.
std::optional<Permutation> param_permutation(const AffineIsometry& g,
                                             const StepSet& s);

struct LinearSearchResult {
  std::vector<AffineIsometry> elements;
  bool closed = true;  // closed under composition within the entry bound
};

/// All linear maps with entries in [-bound, bound], det +-1, permuting S.
LinearSearchResult search_linear_isometries(const StepSet& s, Int bound = 3);

/// All maps p*M + t*tau (entries of M in [-bound, bound], det +-1, tau
/// entries in [-tau_bound, tau_bound]) leaving pascal_slice(S, 0, t, Free)
/// invariant.
std::vector<AffineIsometry> search_affine_isometries(const StepSet& s, Int t,
                                                     Int bound = 3,
                                                     Int tau_bound = 1);

/// Symmetric 2x2 rational matrix [[p, q], [q, r]].
struct SymMat {
  Rational p = 1, q = 0, r = 1;

  friend bool operator==(const SymMat&, const SymMat&) = default;
  bool positive_definite() const { return p > 0 && p * r - q * q > 0; }
  static SymMat euclidean() { return {}; }
  /// alpha * B * beta^T, exact.
  Rational pair(Point alpha, Point beta) const;
};

struct FormFamily {
  int dim = 0;
  std::vector<SymMat> basis;
  /// Positive-definite representative, normalized to p = 1 when possible.
  std::optional<SymMat> positive_definite;
};

struct InvariantForms {
  FormFamily row;         // solutions of M * B * M^T = B for all elements
  FormFamily transposed;  // solutions of M^T * B * M = B for all elements
};

/// Solves for symmetric B invariant under every element's linear part, in
/// both orientations of the action. Exact rational arithmetic.
InvariantForms invariant_bilinear_form(const IsometryGroup& g);

// The published matrices for each model ("paper" group source). Throws
// std::invalid_argument for Simple, which has no published matrices.
std::vector<AffineIsometry> paper_group(Model m);
std::vector<AffineIsometry> paper_generators(Model m);

/// Parses "m11,m12;m21,m22" with optional "+c1,c2" and "+t*u1,u2" suffixes.
AffineIsometry parse_isometry(std::string_view text);
std::string isometry_to_string(const AffineIsometry& g);

/// Elements with matrix, translation, order, det, fixed set and (for
/// reflections) direction.
nlohmann::ordered_json group_report_json(const IsometryGroup& g);
nlohmann::ordered_json isometry_json(const AffineIsometry& g);

}  // namespace walkweyl

#endif  // WALKWEYL_ISOMETRY_HPP
