#include "walkweyl/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace walkweyl {

LaurentPoly LaurentPoly::monomial(Point e, BigInt c) {
  LaurentPoly p;
  if (c != 0) p.terms_[e] = std::move(c);
  return p;
}

BigInt LaurentPoly::coeff(Point e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(Point e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPoly::coefficient_sum() const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      out.add_term(e1 + e2, c1 * c2);
    }
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1) && !(e.x == 0 && e.y == 0);
    if (!unit) os << mag.str();
    if (e.x != 0) {
      if (!unit) os << " ";
      os << "x";
      if (e.x != 1) os << "^" << e.x;
    }
    if (e.y != 0) {
      if (!unit || e.x != 0) os << " ";
      os << "y";
      if (e.y != 1) os << "^" << e.y;
    }
  }
  return os.str();
}

LaurentPoly step_gf(const StepSet& s) {
  LaurentPoly p;
  for (Point step : s.steps()) p.add_term(step, 1);
  return p;
}

LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q) {
  return p * q;
}

LaurentPoly laurent_pow(const LaurentPoly& p, Int n) {
  if (n < 0) throw std::invalid_argument("laurent_pow: negative exponent");
  LaurentPoly result = LaurentPoly::one();
  LaurentPoly base = p;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

LaurentPoly free_gf_slice(const StepSet& s, Point a, Int t) {
  return LaurentPoly::monomial(a) * laurent_pow(step_gf(s), t);
}

}  // namespace walkweyl
