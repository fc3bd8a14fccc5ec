#include "walkweyl/isometry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace walkweyl {

AffineIsometry AffineIsometry::linear(Mat2 m) {
  return affine(m, {}, {});
}

AffineIsometry AffineIsometry::affine(Mat2 m, Point c, Point tau) {
  Int d = m.det();
  if (d != 1 && d != -1) {
    throw std::invalid_argument("isometry: linear part must have det +1 or -1");
  }
  return AffineIsometry{m, c, tau};
}

Point apply_isometry(const AffineIsometry& g, Point p, Int t) {
  return apply_row(p, g.m) + g.c + g.tau * t;
}

AffineIsometry compose(const AffineIsometry& g, const AffineIsometry& h) {
  // (p*Mg + cg + t*taug)*Mh + ch + t*tauh
  return AffineIsometry{g.m * h.m, apply_row(g.c, h.m) + h.c,
                        apply_row(g.tau, h.m) + h.tau};
}

AffineIsometry inverse(const AffineIsometry& g) {
  Int d = g.m.det();
  if (d != 1 && d != -1) {
    throw std::invalid_argument("inverse: linear part must have det +1 or -1");
  }
  Mat2 inv{g.m.m11 * d, -g.m.m01 * d, -g.m.m10 * d, g.m.m00 * d};
  return AffineIsometry{inv, -apply_row(g.c, inv), -apply_row(g.tau, inv)};
}

std::optional<Int> element_order(const AffineIsometry& g, Int cap) {
  if (cap < 1) throw std::invalid_argument("element_order: cap must be >= 1");
  AffineIsometry power = g;
  for (Int k = 1; k <= cap; ++k) {
    if (power.is_identity()) return k;
    power = compose(power, g);
  }
  return std::nullopt;
}

Int sign_of(const AffineIsometry& g) { return g.m.det(); }

bool is_reflection(const AffineIsometry& g) {
  return g.m.det() == -1 && compose(g, g).is_identity();
}

bool LineEq::contains(Point p, Int t) const {
  return Rational(normal.x) * p.x + Rational(normal.y) * p.y == offset_at(t);
}

std::string LineEq::to_string() const {
  std::ostringstream os;
  auto term = [&](Int coef, const char* var, bool first) {
    if (coef == 0) return first;
    if (!first) os << (coef > 0 ? " + " : " - ");
    else if (coef < 0) os << "-";
    Int mag = coef < 0 ? -coef : coef;
    if (mag != 1) os << mag;
    os << var;
    return false;
  };
  bool first = term(normal.x, "x", true);
  first = term(normal.y, "y", first);
  if (first) os << "0";
  os << " = ";
  if (ct == 0) {
    os << walkweyl::to_string(c0);
  } else {
    if (c0 != 0) os << walkweyl::to_string(c0) << " + ";
    if (ct != 1) os << walkweyl::to_string(ct) << "*";
    os << "t";
  }
  return os.str();
}

namespace {

LineEq canonical_line(Point normal, Rational c0, Rational ct) {
  Int g = std::gcd(normal.x < 0 ? -normal.x : normal.x,
                   normal.y < 0 ? -normal.y : normal.y);
  if (g > 1) {
    normal = {normal.x / g, normal.y / g};
    c0 /= g;
    ct /= g;
  }
  if (normal.x < 0 || (normal.x == 0 && normal.y < 0)) {
    normal = -normal;
    c0 = -c0;
    ct = -ct;
  }
  return LineEq{normal, std::move(c0), std::move(ct)};
}

// Primitive kernel direction of d * (M + eps*I) = 0 for eps in {+1, -1};
// nullopt when the matrix is invertible or zero.
std::optional<Point> left_kernel_direction(const Mat2& n) {
  // Equations on d = (d1, d2): n00*d1 + n10*d2 = 0 and n01*d1 + n11*d2 = 0.
  if (n.det() != 0) return std::nullopt;
  Point d{};
  if (n.m00 != 0 || n.m10 != 0) {
    d = {-n.m10, n.m00};
  } else if (n.m01 != 0 || n.m11 != 0) {
    d = {-n.m11, n.m01};
  } else {
    return std::nullopt;  // zero matrix: every direction
  }
  // Both equations must hold (rank exactly 1 guarantees it).
  if (d.x * n.m00 + d.y * n.m10 != 0 || d.x * n.m01 + d.y * n.m11 != 0) {
    return std::nullopt;
  }
  d = primitive_ray(d);
  if (d.y < 0 || (d.y == 0 && d.x < 0)) d = -d;
  return d;
}

}  // namespace

FixedSet fixed_set(const AffineIsometry& g) {
  // Solve p * (M - I) = -(c + t*tau). Column j of N gives the equation
  // N0j*x + N1j*y = w_j with w_j = -c_j - t*tau_j.
  Mat2 n{g.m.m00 - 1, g.m.m01, g.m.m10, g.m.m11 - 1};
  const Rational w0c = -g.c.x, w0t = -g.tau.x;
  const Rational w1c = -g.c.y, w1t = -g.tau.y;

  FixedSet out;
  Int det = n.det();
  if (det != 0) {
    // Unique fixed point, linear in t: p = w * N^{-1}.
    Rational inv00 = Rational(n.m11) / det, inv01 = Rational(-n.m01) / det;
    Rational inv10 = Rational(-n.m10) / det, inv11 = Rational(n.m00) / det;
    out.kind = FixedSet::Kind::FixedPoint;
    out.point0 = RationalPoint{w0c * inv00 + w1c * inv10,
                               w0c * inv01 + w1c * inv11};
    out.point_t = RationalPoint{w0t * inv00 + w1t * inv10,
                                w0t * inv01 + w1t * inv11};
    return out;
  }

  const bool eq0_zero = (n.m00 == 0 && n.m10 == 0);
  const bool eq1_zero = (n.m01 == 0 && n.m11 == 0);
  if (eq0_zero && eq1_zero) {
    if (w0c == 0 && w0t == 0 && w1c == 0 && w1t == 0) {
      out.kind = FixedSet::Kind::WholePlane;
    } else {
      out.kind = FixedSet::Kind::Empty;
    }
    return out;
  }
  // Rank 1: a genuine line if the equations are mutually consistent.
  if (eq0_zero && (w0c != 0 || w0t != 0)) {
    out.kind = FixedSet::Kind::Empty;
    return out;
  }
  if (eq1_zero && (w1c != 0 || w1t != 0)) {
    out.kind = FixedSet::Kind::Empty;
    return out;
  }
  Point alpha;
  Rational offc, offt;
  if (!eq0_zero) {
    alpha = {n.m00, n.m10};
    offc = w0c;
    offt = w0t;
    if (!eq1_zero) {
      // Second equation is lambda times the first; offsets must agree.
      Rational lambda = (n.m01 != 0) ? Rational(n.m01) / n.m00
                                     : Rational(n.m11) / n.m10;
      if (w1c != lambda * w0c || w1t != lambda * w0t) {
        out.kind = FixedSet::Kind::Empty;
        return out;
      }
    }
  } else {
    alpha = {n.m01, n.m11};
    offc = w1c;
    offt = w1t;
  }
  out.kind = FixedSet::Kind::Line;
  out.line = canonical_line(alpha, offc, offt);
  return out;
}

Point reflection_direction(const AffineIsometry& g) {
  if (!is_reflection(g)) {
    throw std::invalid_argument("reflection_direction: not a reflection");
  }
  Mat2 n{g.m.m00 + 1, g.m.m01, g.m.m10, g.m.m11 + 1};
  auto d = left_kernel_direction(n);
  if (!d) throw std::logic_error("reflection_direction: no -1 eigenvector");
  return *d;
}

Point axis_direction(const AffineIsometry& g) {
  Mat2 n{g.m.m00 - 1, g.m.m01, g.m.m10, g.m.m11 - 1};
  auto d = left_kernel_direction(n);
  if (!d) throw std::invalid_argument("axis_direction: no +1 eigenvector line");
  return *d;
}

bool IsometryGroup::contains(const AffineIsometry& g) const {
  return std::find(elements.begin(), elements.end(), g) != elements.end();
}

namespace {

Int translation_norm(const AffineIsometry& g) {
  return std::max(inf_norm(g.c), inf_norm(g.tau));
}

void sort_elements(std::vector<AffineIsometry>& elems) {
  std::sort(elems.begin(), elems.end());
  auto id = std::find_if(elems.begin(), elems.end(),
                         [](const AffineIsometry& g) { return g.is_identity(); });
  if (id != elems.end()) std::rotate(elems.begin(), id, id + 1);
}

}  // namespace

IsometryGroup generate_group(const std::vector<AffineIsometry>& generators,
                             GroupCaps caps) {
  IsometryGroup out;
  out.generators = generators;

  std::vector<AffineIsometry> step = generators;
  for (const AffineIsometry& g : generators) step.push_back(inverse(g));

  std::set<AffineIsometry> seen{AffineIsometry::identity()};
  std::deque<AffineIsometry> queue{AffineIsometry::identity()};
  while (!queue.empty()) {
    AffineIsometry cur = queue.front();
    queue.pop_front();
    for (const AffineIsometry& s : step) {
      AffineIsometry next = compose(cur, s);
      if (seen.contains(next)) continue;
      if (translation_norm(next) > caps.max_translation_norm ||
          seen.size() >= caps.max_elements) {
        out.finite = false;
        out.cap_witness = next;
        out.elements.assign(seen.begin(), seen.end());
        sort_elements(out.elements);
        return out;
      }
      seen.insert(next);
      queue.push_back(next);
    }
  }
  out.finite = true;
  out.elements.assign(seen.begin(), seen.end());
  sort_elements(out.elements);
  return out;
}

IsometryGroup group_from_elements(std::vector<AffineIsometry> elements) {
  IsometryGroup out;
  std::set<AffineIsometry> uniq(elements.begin(), elements.end());
  uniq.insert(AffineIsometry::identity());
  out.elements.assign(uniq.begin(), uniq.end());
  sort_elements(out.elements);
  out.generators = out.elements;
  return out;
}

bool dihedral_presentation_check(const AffineIsometry& r1,
                                 const AffineIsometry& r2, Int n) {
  if (n < 2) throw std::invalid_argument("dihedral check: n must be >= 2");
  if (!compose(r1, r1).is_identity()) return false;
  if (!compose(r2, r2).is_identity()) return false;
  return element_order(compose(r1, r2), n) == n;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] != i) return false;
  }
  return true;
}

std::string Permutation::cycle_string() const {
  std::vector<bool> done(images.size(), false);
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (done[i] || images[i] == i) continue;
    os << "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) os << " ";
      os << (j + 1);
      first = false;
      j = images[j];
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "id";
}

std::optional<Permutation> step_set_permutation(const AffineIsometry& g,
                                                const StepSet& s) {
  Permutation perm;
  perm.images.reserve(s.size());
  for (Point step : s.steps()) {
    auto idx = s.index_of(apply_row(step, g.m));
    if (!idx) return std::nullopt;
    perm.images.push_back(*idx);
  }
  return perm;
}

std::optional<InvarianceWitness> counts_invariance_check(
    const AffineIsometry& g, const StepSet& s, Int t_max) {
  if (t_max < 1) throw std::invalid_argument("counts_invariance: t_max >= 1");
  AffineIsometry ginv = inverse(g);
  auto slices = pascal_slices(s, {0, 0}, t_max, Region::free());
  for (Int t = 1; t <= t_max; ++t) {
    const CountTable& slice = slices[static_cast<std::size_t>(t)];
    std::set<Point> candidates;
    for (const auto& [p, c] : slice.counts) {
      candidates.insert(p);
      candidates.insert(apply_isometry(ginv, p, t));
    }
    for (Point b : candidates) {
      if (slice.at(b) != slice.at(apply_isometry(g, b, t))) {
        return InvarianceWitness{t, b};
      }
    }
  }
  return std::nullopt;
}

std::vector<AffineForm> multiplicity_forms(const StepSet& s) {
  if (s.size() != 3) {
    throw std::invalid_argument(
        "multiplicity_forms: needs exactly three steps with a full-rank "
        "system; use counts_invariance_check instead");
  }
  const auto& st = s.steps();
  // A * n = (a, b, t)^T with columns (step_x, step_y, 1).
  Rational a00 = st[0].x, a01 = st[1].x, a02 = st[2].x;
  Rational a10 = st[0].y, a11 = st[1].y, a12 = st[2].y;
  Rational a20 = 1, a21 = 1, a22 = 1;
  Rational det = a00 * (a11 * a22 - a12 * a21) -
                 a01 * (a10 * a22 - a12 * a20) +
                 a02 * (a10 * a21 - a11 * a20);
  if (det == 0) {
    throw std::invalid_argument(
        "multiplicity_forms: rank-deficient system; use "
        "counts_invariance_check instead");
  }
  // Rows of A^{-1} via the adjugate.
  Rational inv[3][3] = {
      {(a11 * a22 - a12 * a21) / det, (a02 * a21 - a01 * a22) / det,
       (a01 * a12 - a02 * a11) / det},
      {(a12 * a20 - a10 * a22) / det, (a00 * a22 - a02 * a20) / det,
       (a02 * a10 - a00 * a12) / det},
      {(a10 * a21 - a11 * a20) / det, (a01 * a20 - a00 * a21) / det,
       (a00 * a11 - a01 * a10) / det}};
  std::vector<AffineForm> forms(3);
  for (int i = 0; i < 3; ++i) {
    forms[static_cast<std::size_t>(i)] =
        AffineForm{inv[i][0], inv[i][1], inv[i][2], 0};
  }
  return forms;
}

std::optional<Permutation> param_permutation(const AffineIsometry& g,
                                             const StepSet& s) {
  std::vector<AffineForm> n = multiplicity_forms(s);
  // Substitute (a', b') = (a, b)*M + c + t*tau into each form.
  std::vector<AffineForm> m(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    m[i].a = n[i].a * g.m.m00 + n[i].b * g.m.m01;
    m[i].b = n[i].a * g.m.m10 + n[i].b * g.m.m11;
    m[i].t = n[i].a * g.tau.x + n[i].b * g.tau.y + n[i].t;
    m[i].one = n[i].a * g.c.x + n[i].b * g.c.y + n[i].one;
  }
  Permutation perm;
  perm.images.resize(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    auto it = std::find(n.begin(), n.end(), m[i]);
    if (it == n.end()) return std::nullopt;
    perm.images[i] = static_cast<std::size_t>(it - n.begin());
  }
  // The images must form a bijection.
  std::vector<bool> hit(n.size(), false);
  for (std::size_t v : perm.images) {
    if (hit[v]) return std::nullopt;
    hit[v] = true;
  }
  return perm;
}

LinearSearchResult search_linear_isometries(const StepSet& s, Int bound) {
  if (bound < 1) throw std::invalid_argument("search: bound must be >= 1");
  LinearSearchResult out;
  for (Int a = -bound; a <= bound; ++a) {
    for (Int b = -bound; b <= bound; ++b) {
      for (Int c = -bound; c <= bound; ++c) {
        for (Int d = -bound; d <= bound; ++d) {
          Mat2 m{a, b, c, d};
          Int det = m.det();
          if (det != 1 && det != -1) continue;
          AffineIsometry g = AffineIsometry::linear(m);
          if (step_set_permutation(g, s)) out.elements.push_back(g);
        }
      }
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  for (const AffineIsometry& g : out.elements) {
    for (const AffineIsometry& h : out.elements) {
      AffineIsometry gh = compose(g, h);
      if (!std::binary_search(out.elements.begin(), out.elements.end(), gh)) {
        out.closed = false;
      }
    }
  }
  return out;
}

namespace {

bool slice_invariant(const CountTable& slice, const AffineIsometry& g, Int t) {
  AffineIsometry ginv = inverse(g);
  for (const auto& [p, c] : slice.counts) {
    if (slice.at(apply_isometry(g, p, t)) != c) return false;
    if (slice.at(apply_isometry(ginv, p, t)) != c) return false;
  }
  return true;
}

}  // namespace

std::vector<AffineIsometry> search_affine_isometries(const StepSet& s, Int t,
                                                     Int bound, Int tau_bound) {
  if (t < 1) throw std::invalid_argument("affine search: t must be >= 1");
  CountTable slice = pascal_slice(s, {0, 0}, t, Region::free());
  std::vector<AffineIsometry> out;
  for (Int a = -bound; a <= bound; ++a) {
    for (Int b = -bound; b <= bound; ++b) {
      for (Int c = -bound; c <= bound; ++c) {
        for (Int d = -bound; d <= bound; ++d) {
          Mat2 m{a, b, c, d};
          Int det = m.det();
          if (det != 1 && det != -1) continue;
          for (Int u = -tau_bound; u <= tau_bound; ++u) {
            for (Int v = -tau_bound; v <= tau_bound; ++v) {
              AffineIsometry g = AffineIsometry::affine(m, {}, {u, v});
              if (slice_invariant(slice, g, t)) out.push_back(g);
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational SymMat::pair(Point alpha, Point beta) const {
  return Rational(alpha.x) * (p * beta.x + q * beta.y) +
         Rational(alpha.y) * (q * beta.x + r * beta.y);
}

namespace {

// Right null space of the (rows x 3) system, exact.
std::vector<std::array<Rational, 3>> null_space_3(
    std::vector<std::array<Rational, 3>> rows) {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < 3 && rank < rows.size(); ++col) {
    std::size_t pr = rank;
    while (pr < rows.size() && rows[pr][col] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[rank], rows[pr]);
    Rational inv = rows[rank][col];
    for (auto& v : rows[rank]) v /= inv;
    for (std::size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == rank || rows[rr][col] == 0) continue;
      Rational f = rows[rr][col];
      for (std::size_t cc = 0; cc < 3; ++cc) rows[rr][cc] -= f * rows[rank][cc];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(3, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::array<Rational, 3>> basis;
  for (std::size_t fc = 0; fc < 3; ++fc) {
    if (is_pivot[fc]) continue;
    std::array<Rational, 3> v{0, 0, 0};
    v[fc] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
      v[pivot_col[r]] = -rows[r][fc];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

FormFamily solve_form_family(const std::vector<AffineIsometry>& elements,
                             bool transposed) {
  std::vector<std::array<Rational, 3>> rows;
  for (const AffineIsometry& g : elements) {
    Mat2 m = transposed ? g.m.transpose() : g.m;
    // Coefficients of (p, q, r) in M*B*M^T - B = 0, entrywise.
    rows.push_back({Rational(m.m00 * m.m00 - 1), Rational(2 * m.m00 * m.m01),
                    Rational(m.m01 * m.m01)});
    rows.push_back({Rational(m.m00 * m.m10),
                    Rational(m.m00 * m.m11 + m.m01 * m.m10 - 1),
                    Rational(m.m01 * m.m11)});
    rows.push_back({Rational(m.m10 * m.m10), Rational(2 * m.m10 * m.m11),
                    Rational(m.m11 * m.m11 - 1)});
  }
  if (rows.empty()) rows.push_back({0, 0, 0});

  FormFamily fam;
  auto basis = null_space_3(std::move(rows));
  fam.dim = static_cast<int>(basis.size());
  for (const auto& v : basis) fam.basis.push_back(SymMat{v[0], v[1], v[2]});

  // Deterministic hunt for a positive-definite representative.
  static const Rational coords[] = {Rational(0),      Rational(1),
                                    Rational(-1),     Rational(2),
                                    Rational(-2),     Rational(1) / 2,
                                    Rational(-1) / 2};
  std::vector<std::size_t> idx(basis.size(), 0);
  auto advance = [&]() {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (++idx[i] < std::size(coords)) return true;
      idx[i] = 0;
    }
    return false;
  };
  if (!basis.empty()) {
    do {
      SymMat cand{0, 0, 0};
      for (std::size_t i = 0; i < basis.size(); ++i) {
        cand.p += coords[idx[i]] * basis[i][0];
        cand.q += coords[idx[i]] * basis[i][1];
        cand.r += coords[idx[i]] * basis[i][2];
      }
      if (cand.positive_definite()) {
        if (cand.p != 0) {
          cand.q /= cand.p;
          cand.r /= cand.p;
          cand.p = 1;
        }
        fam.positive_definite = cand;
        break;
      }
    } while (advance());
  }
  return fam;
}

}  // namespace

InvariantForms invariant_bilinear_form(const IsometryGroup& g) {
  InvariantForms out;
  out.row = solve_form_family(g.elements, false);
  out.transposed = solve_form_family(g.elements, true);
  return out;
}

std::vector<AffineIsometry> paper_group(Model m) {
  auto lin = [](Int a, Int b, Int c, Int d) {
    return AffineIsometry::linear(Mat2{a, b, c, d});
  };
  auto aff = [](Int a, Int b, Int c, Int d, Int u, Int v) {
    return AffineIsometry::affine(Mat2{a, b, c, d}, {}, {u, v});
  };
  switch (m) {
    case Model::ReverseKreweras:
      return {lin(1, 0, 0, 1),  lin(-1, 1, 0, 1),  lin(1, 0, 1, -1),
              lin(-1, 1, -1, 0), lin(0, -1, 1, -1), lin(0, -1, -1, 0)};
    case Model::Kreweras:
      return {lin(1, 0, 0, 1),  lin(-1, -1, 0, 1), lin(1, 0, -1, -1),
              lin(-1, -1, 1, 0), lin(0, 1, -1, -1), lin(0, 1, 1, 0)};
    case Model::Gessel:
      return {lin(1, 0, 0, 1),   lin(1, 0, -2, -1), lin(-1, -1, 0, 1),
              lin(1, 1, 0, -1),  lin(-1, 0, 2, 1),  lin(-1, 0, 0, -1),
              lin(1, 1, -2, -1), lin(-1, -1, 2, 1)};
    case Model::MishnaRechnitzer:
      // The six slice symmetries: linear parts indexed by the parameter
      // permutation they induce, translations proportional to t.
      return {aff(1, 0, 0, 1, 0, 0),    // identity
              aff(0, 1, 1, 0, 0, 0),    // swap
              aff(1, -1, 0, -1, 0, 1),  // fixes x + 2y = t
              aff(-1, 0, -1, 1, 1, 0),  // fixes 2x + y = t
              aff(-1, 1, -1, 0, 1, 0),  // rotation
              aff(0, -1, 1, -1, 0, 1)}; // rotation
    case Model::Simple:
      throw std::invalid_argument(
          "model 'simple' has no published matrices; use --source search");
  }
  throw std::logic_error("paper_group: bad enum");
}

std::vector<AffineIsometry> paper_generators(Model m) {
  auto elems = paper_group(m);
  switch (m) {
    case Model::ReverseKreweras:
    case Model::Kreweras:
      return {elems[1], elems[2]};  // the two generating reflections g1, g2
    case Model::Gessel:
      return {elems[1], elems[2], elems[3], elems[4]};  // g1..g4
    case Model::MishnaRechnitzer:
      return {elems[1], elems[2]};  // swap and one affine reflection
    case Model::Simple:
      throw std::invalid_argument(
          "model 'simple' has no published matrices; use --source search");
  }
  throw std::logic_error("paper_generators: bad enum");
}

AffineIsometry parse_isometry(std::string_view text) {
  std::string cleaned;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) cleaned.push_back(ch);
  }
  auto parse_pair = [](std::string_view part, const char* what) -> Point {
    auto comma = part.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument(std::string("isometry: expected 'a,b' in ") +
                                  what);
    }
    try {
      return {std::stoll(std::string(part.substr(0, comma))),
              std::stoll(std::string(part.substr(comma + 1)))};
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("isometry: malformed ") + what);
    }
  };

  // Split the matrix body from the optional "+c" and "+t*u" suffixes.
  std::string body = cleaned;
  Point c{}, tau{};
  auto plus = body.find('+');
  std::string suffices;
  if (plus != std::string::npos) {
    suffices = body.substr(plus);
    body = body.substr(0, plus);
  }
  auto semi = body.find(';');
  if (semi == std::string::npos) {
    throw std::invalid_argument("isometry: expected 'm11,m12;m21,m22'");
  }
  Point row0 = parse_pair(body.substr(0, semi), "matrix row 1");
  Point row1 = parse_pair(body.substr(semi + 1), "matrix row 2");

  while (!suffices.empty()) {
    if (suffices[0] != '+') {
      throw std::invalid_argument("isometry: malformed translation suffix");
    }
    std::string rest = suffices.substr(1);
    auto next = rest.find('+');
    std::string piece = next == std::string::npos ? rest : rest.substr(0, next);
    suffices = next == std::string::npos ? "" : rest.substr(next);
    if (piece.rfind("t*", 0) == 0) {
      tau = parse_pair(piece.substr(2), "per-t translation");
    } else {
      c = parse_pair(piece, "translation");
    }
  }
  return AffineIsometry::affine(Mat2{row0.x, row0.y, row1.x, row1.y}, c, tau);
}

std::string isometry_to_string(const AffineIsometry& g) {
  std::ostringstream os;
  os << g.m.m00 << "," << g.m.m01 << ";" << g.m.m10 << "," << g.m.m11;
  if (g.c != Point{}) os << "+" << g.c.x << "," << g.c.y;
  if (g.tau != Point{}) os << "+t*" << g.tau.x << "," << g.tau.y;
  return os.str();
}

nlohmann::ordered_json isometry_json(const AffineIsometry& g) {
  nlohmann::ordered_json j;
  j["matrix"] = {{g.m.m00, g.m.m01}, {g.m.m10, g.m.m11}};
  j["translation"] = {g.c.x, g.c.y};
  j["translation_per_t"] = {g.tau.x, g.tau.y};
  j["det"] = sign_of(g);
  auto ord = element_order(g, 64);
  if (ord) {
    j["order"] = *ord;
  } else {
    j["order"] = "infinite(cap=64)";
  }
  FixedSet fs = fixed_set(g);
  switch (fs.kind) {
    case FixedSet::Kind::WholePlane:
      j["fixed"] = "plane";
      break;
    case FixedSet::Kind::Empty:
      j["fixed"] = "empty";
      break;
    case FixedSet::Kind::Line:
      j["fixed"] = fs.line->to_string();
      break;
    case FixedSet::Kind::FixedPoint:
      j["fixed"] = "point (" + to_string(fs.point0->x) + "," +
                   to_string(fs.point0->y) + ")" +
                   ((fs.point_t->x != 0 || fs.point_t->y != 0)
                        ? " + t*(" + to_string(fs.point_t->x) + "," +
                              to_string(fs.point_t->y) + ")"
                        : "");
      break;
  }
  if (is_reflection(g)) {
    Point d = reflection_direction(g);
    j["reflection_direction"] = {d.x, d.y};
  }
  return j;
}

nlohmann::ordered_json group_report_json(const IsometryGroup& g) {
  nlohmann::ordered_json j;
  j["order"] = g.elements.size();
  j["finite"] = g.finite;
  if (g.cap_witness) j["cap_witness"] = isometry_to_string(*g.cap_witness);
  auto arr = nlohmann::ordered_json::array();
  for (const AffineIsometry& e : g.elements) arr.push_back(isometry_json(e));
  j["elements"] = arr;
  return j;
}

}  // namespace walkweyl
