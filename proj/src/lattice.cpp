#include "walkweyl/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace walkweyl {

Point primitive_ray(Point d) {
  if (d == Point{}) throw std::invalid_argument("primitive_ray: zero vector");
  Int g = std::gcd(d.x < 0 ? -d.x : d.x, d.y < 0 ? -d.y : d.y);
  return {d.x / g, d.y / g};
}

std::string to_string(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

namespace {

constexpr const char* kModelTags[] = {"reverse-kreweras", "kreweras", "gessel",
                                      "mishna-rechnitzer", "simple"};

}  // namespace

std::optional<Model> parse_model(std::string_view tag) {
  for (std::size_t i = 0; i < std::size(kModelTags); ++i) {
    if (tag == kModelTags[i]) return static_cast<Model>(i);
  }
  return std::nullopt;
}

std::string model_name(Model m) {
  return kModelTags[static_cast<std::size_t>(m)];
}

const std::vector<Model>& all_models() {
  static const std::vector<Model> models = {
      Model::ReverseKreweras, Model::Kreweras, Model::Gessel,
      Model::MishnaRechnitzer, Model::Simple};
  return models;
}

StepSet::StepSet(std::vector<Point> steps, std::optional<Model> model)
    : steps_(std::move(steps)), model_(model) {
  std::set<Point> seen;
  for (Point s : steps_) {
    if (!seen.insert(s).second) {
      throw std::invalid_argument("step set: duplicate step " + to_string(s));
    }
  }
}

std::string StepSet::name() const {
  return model_ ? model_name(*model_) : "custom";
}

bool StepSet::contains(Point s) const {
  return std::find(steps_.begin(), steps_.end(), s) != steps_.end();
}

std::optional<std::size_t> StepSet::index_of(Point s) const {
  auto it = std::find(steps_.begin(), steps_.end(), s);
  if (it == steps_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - steps_.begin());
}

Int StepSet::max_step_norm() const {
  Int m = 0;
  for (Point s : steps_) m = std::max(m, inf_norm(s));
  return m;
}

StepSet named_step_set(Model m) {
  switch (m) {
    case Model::ReverseKreweras:
      return StepSet({{1, 0}, {0, 1}, {-1, -1}}, m);
    case Model::Kreweras:
      return StepSet({{-1, 0}, {0, -1}, {1, 1}}, m);
    case Model::Gessel:
      return StepSet({{-1, 0}, {1, 0}, {-1, -1}, {1, 1}}, m);
    case Model::MishnaRechnitzer:
      return StepSet({{-1, 1}, {1, -1}, {1, 1}}, m);
    case Model::Simple:
      return StepSet({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, m);
  }
  throw std::logic_error("named_step_set: bad enum");
}

StepSet named_step_set(std::string_view tag) {
  if (auto m = parse_model(tag)) return named_step_set(*m);
  std::string msg = "unknown model tag '" + std::string(tag) + "'; valid tags:";
  for (const char* t : kModelTags) msg += std::string(" ") + t;
  throw std::invalid_argument(msg);
}

StepSet parse_step_set(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) cleaned.push_back(ch);
  }
  std::vector<Point> steps;
  std::istringstream in(cleaned);
  std::string pair;
  while (std::getline(in, pair, ';')) {
    if (pair.empty()) continue;
    auto comma = pair.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("step set: expected 'x,y' but got '" + pair +
                                  "'");
    }
    try {
      std::size_t used = 0;
      Int x = std::stoll(pair.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument(pair);
      Int y = std::stoll(pair.substr(comma + 1), &used);
      if (used != pair.size() - comma - 1) throw std::invalid_argument(pair);
      steps.push_back({x, y});
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("step set: malformed pair '" + pair + "'");
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("step set: coordinate out of range in '" +
                                  pair + "'");
    }
  }
  return StepSet(std::move(steps));
}

bool all_short_steps(const StepSet& s) {
  for (Point p : s.steps()) {
    if (p.x * p.x + p.y * p.y > 2) return false;
  }
  return true;
}

RegionTag classify_point(Point p) {
  if (p.x > 0 && p.y > 0) return RegionTag::Interior;
  if (p.x == 0 && p.y == 0) return RegionTag::BothBoundaries;
  if (p.y == 0 && p.x > 0) return RegionTag::XBoundary;
  if (p.x == 0 && p.y > 0) return RegionTag::YBoundary;
  return RegionTag::Exterior;
}

std::string region_tag_name(RegionTag tag) {
  switch (tag) {
    case RegionTag::Interior: return "interior";
    case RegionTag::XBoundary: return "x-boundary";
    case RegionTag::YBoundary: return "y-boundary";
    case RegionTag::BothBoundaries: return "both-boundaries";
    case RegionTag::Exterior: return "exterior";
  }
  throw std::logic_error("region_tag_name: bad enum");
}

RationalPoint barycenter(const StepSet& s) {
  if (s.empty()) throw std::invalid_argument("barycenter: empty step set");
  Rational sx = 0, sy = 0;
  for (Point p : s.steps()) {
    sx += p.x;
    sy += p.y;
  }
  Rational n = static_cast<Int>(s.size());
  return {sx / n, sy / n};
}

RationalPoint drift(const StepSet& s, Int t) {
  RationalPoint c = barycenter(s);
  return {c.x * t, c.y * t};
}

}  // namespace walkweyl
