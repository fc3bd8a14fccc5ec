#include "walkweyl/enumerate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace walkweyl {

Region Region::free() { return Region{}; }

Region Region::open_quadrant() {
  Region r;
  r.kind_ = Kind::OpenQuadrant;
  r.name_ = "open-quadrant";
  return r;
}

Region Region::closed_quadrant() {
  Region r;
  r.kind_ = Kind::ClosedQuadrant;
  r.name_ = "closed-quadrant";
  return r;
}

Region Region::sector(std::vector<HalfPlane> bounds, std::string label) {
  Region r;
  r.kind_ = Kind::Sector;
  r.name_ = std::move(label);
  r.bounds_ = std::move(bounds);
  return r;
}

bool Region::contains(Point p) const {
  switch (kind_) {
    case Kind::Free:
      return true;
    case Kind::OpenQuadrant:
      return p.x > 0 && p.y > 0;
    case Kind::ClosedQuadrant:
      return p.x >= 0 && p.y >= 0;
    case Kind::Sector:
      for (const HalfPlane& h : bounds_) {
        if (!h.contains(p)) return false;
      }
      return true;
  }
  return false;
}

Region parse_region(std::string_view flag) {
  if (flag == "free") return Region::free();
  if (flag == "qp") return Region::open_quadrant();
  if (flag == "closed") return Region::closed_quadrant();
  throw std::invalid_argument("unknown region '" + std::string(flag) +
                              "'; valid regions: free qp closed");
}

BigInt CountTable::total() const {
  BigInt sum = 0;
  for (const auto& [p, c] : counts) sum += c;
  return sum;
}

BigInt CountTable::at(Point p) const {
  auto it = counts.find(p);
  return it == counts.end() ? BigInt(0) : it->second;
}

std::vector<CountTable> pascal_slices(const StepSet& s, Point a, Int t_max,
                                      const Region& r) {
  if (t_max < 0) throw std::invalid_argument("pascal_slices: negative length");
  std::vector<CountTable> out(static_cast<std::size_t>(t_max) + 1);
  for (Int t = 0; t <= t_max; ++t) {
    out[static_cast<std::size_t>(t)].t = t;
    out[static_cast<std::size_t>(t)].start = a;
    out[static_cast<std::size_t>(t)].region = r.name();
  }
  if (!r.contains(a)) return out;  // all counts zero

  std::map<Point, BigInt> frontier{{a, 1}};
  out[0].counts = frontier;
  for (Int t = 1; t <= t_max; ++t) {
    std::map<Point, BigInt> next;
    for (const auto& [p, c] : frontier) {
      for (Point step : s.steps()) {
        Point q = p + step;
        if (!r.contains(q)) continue;
        next[q] += c;
      }
    }
    frontier = std::move(next);
    out[static_cast<std::size_t>(t)].counts = frontier;
  }
  return out;
}

CountTable pascal_slice(const StepSet& s, Point a, Int t, const Region& r) {
  return std::move(pascal_slices(s, a, t, r).back());
}

BigInt region_count(const StepSet& s, Point a, Point b, Int t,
                    const Region& r) {
  if (t < 0) throw std::invalid_argument("region_count: negative length");
  if (!r.contains(a) || !r.contains(b)) return 0;
  return pascal_slice(s, a, t, r).at(b);
}

BigInt free_count(const StepSet& s, Point a, Point b, Int t) {
  return region_count(s, a, b, t, Region::free());
}

namespace {

// Exact Gaussian elimination of [A | rhs] with A given by columns. Returns
// the reduced row-echelon data: pivot column per row and the reduced matrix.
struct Echelon {
  std::vector<std::vector<Rational>> m;  // rows of [A | rhs]
  std::vector<std::size_t> pivot_cols;
  std::size_t cols = 0;  // number of unknowns
  bool consistent = true;
};

Echelon reduce_system(const StepSet& s, Point d, Int t) {
  std::size_t k = s.size();
  Echelon e;
  e.cols = k;
  e.m.assign(3, std::vector<Rational>(k + 1, 0));
  for (std::size_t i = 0; i < k; ++i) {
    e.m[0][i] = s.steps()[i].x;
    e.m[1][i] = s.steps()[i].y;
    e.m[2][i] = 1;
  }
  e.m[0][k] = d.x;
  e.m[1][k] = d.y;
  e.m[2][k] = t;

  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < 3; ++col) {
    std::size_t pivot = row;
    while (pivot < 3 && e.m[pivot][col] == 0) ++pivot;
    if (pivot == 3) continue;
    std::swap(e.m[row], e.m[pivot]);
    Rational inv = e.m[row][col];
    for (auto& v : e.m[row]) v /= inv;
    for (std::size_t rr = 0; rr < 3; ++rr) {
      if (rr == row || e.m[rr][col] == 0) continue;
      Rational f = e.m[rr][col];
      for (std::size_t cc = 0; cc <= k; ++cc) e.m[rr][cc] -= f * e.m[row][cc];
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t rr = row; rr < 3; ++rr) {
    if (e.m[rr][k] != 0) e.consistent = false;
  }
  return e;
}

bool integral_nonneg(const Rational& v, Int& out) {
  if (boost::multiprecision::denominator(v) != 1) return false;
  BigInt num = boost::multiprecision::numerator(v);
  if (num < 0) return false;
  out = static_cast<Int>(num);
  return true;
}

}  // namespace

std::vector<MultiplicityVector> step_multiplicities(const StepSet& s, Point d,
                                                    Int t) {
  if (t < 0) throw std::invalid_argument("step_multiplicities: negative length");
  std::size_t k = s.size();
  if (k == 0) {
    if (t == 0 && d == Point{}) return {MultiplicityVector{}};
    return {};
  }

  Echelon e = reduce_system(s, d, t);
  if (!e.consistent) return {};

  std::vector<bool> is_pivot(k, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < k; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }

  std::vector<MultiplicityVector> out;
  // Assign the free coordinates (each a count in [0, t]) and back-substitute.
  std::vector<Int> free_vals(free_cols.size(), 0);
  auto emit = [&]() {
    std::vector<Rational> n(k, 0);
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
      n[free_cols[j]] = free_vals[j];
    }
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      Rational v = e.m[r][k];
      for (std::size_t j = 0; j < free_cols.size(); ++j) {
        v -= e.m[r][free_cols[j]] * free_vals[j];
      }
      n[e.pivot_cols[r]] = v;
    }
    MultiplicityVector vec(k, 0);
    Int sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      Int vi = 0;
      if (!integral_nonneg(n[i], vi)) return;
      vec[i] = vi;
      sum += vi;
    }
    if (sum != t) return;
    out.push_back(std::move(vec));
  };

  // Depth-first walk over the free coordinates, bounded by the total t.
  auto walk = [&](auto&& self, std::size_t j, Int budget) -> void {
    if (j == free_cols.size()) {
      emit();
      return;
    }
    for (Int v = 0; v <= budget; ++v) {
      free_vals[j] = v;
      self(self, j + 1, budget - v);
    }
  };
  walk(walk, 0, t);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt multinomial(Int t, std::span<const Int> parts) {
  Int sum = 0;
  for (Int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += p;
  }
  if (sum != t) throw std::invalid_argument("multinomial: parts do not sum to t");
  // Product of binomials C(partial sums, part) avoids a factorial table.
  BigInt result = 1;
  Int upper = 0;
  for (Int p : parts) {
    for (Int i = 1; i <= p; ++i) {
      ++upper;
      result = result * upper / i;  // exact: C(n,k) built incrementally
    }
  }
  return result;
}

BigInt free_count_multinomial(const StepSet& s, Point a, Point b, Int t) {
  BigInt total = 0;
  for (const MultiplicityVector& n : step_multiplicities(s, b - a, t)) {
    total += multinomial(t, n);
  }
  return total;
}

BigInt brute_force_paths(const StepSet& s, Point a, Int t, const Region& r,
                         const PathVisitor& visit, BruteForceOptions opt) {
  if (t < 0) throw std::invalid_argument("brute_force_paths: negative length");
  std::uint64_t sequences = 1;
  for (Int i = 0; i < t; ++i) {
    if (s.size() != 0 && sequences > opt.cap / s.size()) {
      throw std::invalid_argument(
          "brute_force_paths: |S|^t exceeds the cap of " +
          std::to_string(opt.cap) + " sequences; use the DP counts instead");
    }
    sequences *= s.size();
  }

  if (!r.contains(a)) return 0;

  BigInt count = 0;
  std::vector<Point> steps(static_cast<std::size_t>(t));
  auto rec = [&](auto&& self, Int depth, Point at) -> void {
    if (depth == t) {
      ++count;
      if (visit) visit(std::span<const Point>(steps), at);
      return;
    }
    for (Point step : s.steps()) {
      Point next = at + step;
      if (!r.contains(next)) continue;
      steps[static_cast<std::size_t>(depth)] = step;
      self(self, depth + 1, next);
    }
  };
  rec(rec, 0, a);
  return count;
}

std::string to_csv(const CountTable& table) {
  std::ostringstream os;
  os << "x,y,count\n";
  for (const auto& [p, c] : table.counts) {
    os << p.x << "," << p.y << "," << c.str() << "\n";
  }
  return os.str();
}

nlohmann::ordered_json to_json(const CountTable& table) {
  nlohmann::ordered_json j;
  j["t"] = table.t;
  j["start"] = {table.start.x, table.start.y};
  j["region"] = table.region;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [p, c] : table.counts) {
    rows.push_back({p.x, p.y, c.str()});
  }
  j["counts"] = rows;
  return j;
}

}  // namespace walkweyl
