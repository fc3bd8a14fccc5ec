#ifndef WALKWEYL_LAURENT_HPP
#define WALKWEYL_LAURENT_HPP

#include <map>
#include <string>

#include "walkweyl/lattice.hpp"

namespace walkweyl {

/// Laurent polynomial in two variables: a finitely supported map from integer
/// exponent pairs to arbitrary-precision coefficients. Zero coefficients are
/// never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Point, BigInt>;

  LaurentPoly() = default;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return monomial({0, 0}); }
  static LaurentPoly monomial(Point e, BigInt c = 1);

  BigInt coeff(Point e) const;
  void add_term(Point e, const BigInt& c);
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient_sum() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Readable form like "x + y + x^-1 y^-1" (terms in exponent order).
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Coefficient of x^a y^b is the multiplicity (0 or 1) of (a,b) in S.
LaurentPoly step_gf(const StepSet& s);

LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q);
/// Power by repeated squaring; throws std::invalid_argument for n < 0.
LaurentPoly laurent_pow(const LaurentPoly& p, Int n);

/// monomial(a) * step_gf(S)^t; the coefficient at b counts free t-paths a -> b.
LaurentPoly free_gf_slice(const StepSet& s, Point a, Int t);

}  // namespace walkweyl

#endif  // WALKWEYL_LAURENT_HPP
