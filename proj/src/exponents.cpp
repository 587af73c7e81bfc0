#include "germlab/exponents.hpp"

#include <algorithm>

namespace germlab {

RelativeExponent relative_exponent(const CharPoly& p) {
  auto mr = p.certified_min_ratio();
  if (!mr)
    fail(Errc::indeterminate, "truncation too small to determine the relative exponent");
  return {mr->value, mr->index, mr->order};
}

NewtonPolygon::NewtonPolygon(std::vector<std::pair<long, long>> vertices) : v_(std::move(vertices)) {
  if (v_.empty()) fail(Errc::invalid_input, "polygon needs at least one vertex");
  if (v_.front().first != 0) fail(Errc::invalid_input, "first polygon vertex must have x = 0");
  for (const auto& [x, y] : v_)
    if (x < 0 || y < 0) fail(Errc::invalid_input, "polygon vertices must be non-negative");
  for (size_t i = 0; i + 1 < v_.size(); ++i) {
    if (!(v_[i].first < v_[i + 1].first && v_[i].second > v_[i + 1].second))
      fail(Errc::invalid_input, "polygon vertices must strictly increase in x and decrease in y");
  }
  // Convexity: inclinations |dx|/|dy| strictly increase left to right.
  for (size_t i = 0; i + 2 < v_.size(); ++i) {
    long dx1 = v_[i + 1].first - v_[i].first, dy1 = v_[i].second - v_[i + 1].second;
    long dx2 = v_[i + 2].first - v_[i + 1].first, dy2 = v_[i + 1].second - v_[i + 2].second;
    if (dx1 * dy2 >= dx2 * dy1)
      fail(Errc::invalid_input, "polygon edges must have strictly increasing inclination");
  }
}

NewtonPolygon NewtonPolygon::from_points(std::vector<std::pair<long, long>> points) {
  if (points.empty()) fail(Errc::invalid_input, "polygon needs at least one point");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // Pareto frontier of the up-right closures: strictly increasing x,
  // strictly decreasing y.
  std::vector<std::pair<long, long>> frontier;
  for (const auto& p : points) {
    if (!frontier.empty() && p.second >= frontier.back().second) continue;
    frontier.push_back(p);
  }

  // Lower convex chain over the frontier.
  std::vector<std::pair<long, long>> hull;
  for (const auto& p : frontier) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      long cross = (b.first - a.first) * (p.second - a.second) -
                   (b.second - a.second) * (p.first - a.first);
      if (cross <= 0)
        hull.pop_back();  // b lies on or above segment a->p
      else
        break;
    }
    hull.push_back(p);
  }
  return NewtonPolygon(std::move(hull));
}

std::vector<Rational> NewtonPolygon::edge_inclinations() const {
  std::vector<Rational> out;
  for (size_t i = 0; i + 1 < v_.size(); ++i)
    out.push_back(Rational(v_[i + 1].first - v_[i].first, v_[i].second - v_[i + 1].second));
  return out;
}

bool NewtonPolygon::region_contains(long x, long y) const {
  if (x < 0 || y < 0) return false;
  if (y >= v_.front().second) return true;
  for (size_t i = 0; i + 1 < v_.size(); ++i) {
    long y1 = v_[i].second, y2 = v_[i + 1].second;
    if (y < y1 && y >= y2) {
      // boundary x at height y along the edge, compared exactly
      long lhs = (x - v_[i].first) * (y1 - y2);
      long rhs = (y1 - y) * (v_[i + 1].first - v_[i].first);
      return lhs >= rhs;
    }
  }
  return false;  // below the last vertex
}

NewtonPolygon NewtonPolygon::dilated(long factor) const {
  if (factor < 1) fail(Errc::invalid_input, "dilation factor must be positive");
  std::vector<std::pair<long, long>> v;
  v.reserve(v_.size());
  for (const auto& [x, y] : v_) v.push_back({x * factor, y * factor});
  return NewtonPolygon(std::move(v));
}

NewtonPolygon newton_polygon(const CharPoly& p) {
  // a_0 = 1 contributes (0, m); truncated-away coefficients lie strictly
  // inside the hull once the last coefficient is visible, which the
  // construction certifies.
  if (!p.exact() && p.coefficients().back().is_zero())
    fail(Errc::indeterminate, "truncation too small to determine the Newton polygon");
  std::vector<std::pair<long, long>> pts;
  const int m = p.min_degree();
  pts.push_back({0, m});
  for (int i = 1; i <= m; ++i) {
    const Poly& a = p.coefficients()[i - 1];
    if (a.is_zero()) continue;
    pts.push_back({a.ord().value(), m - i});
  }
  return NewtonPolygon::from_points(std::move(pts)).dilated(p.power());
}

Rational theta(const CharPoly& p) { return relative_exponent(p).value; }

NewtonPolygon sigma(const NewtonPolygon& p) {
  std::vector<std::pair<long, long>> v;
  for (const auto& [x, y] : p.vertices()) v.push_back({y, x});
  std::sort(v.begin(), v.end());
  return NewtonPolygon(std::move(v));
}

Rational last_edge_inclination(const NewtonPolygon& p) {
  const auto& v = p.vertices();
  if (v.size() < 2) fail(Errc::degenerate, "single-vertex polygon has no edges");
  const auto& a = v[v.size() - 2];
  const auto& b = v[v.size() - 1];
  return Rational(b.first - a.first, a.second - b.second);
}

bool polygon_includes(const NewtonPolygon& a, const NewtonPolygon& b) {
  return std::all_of(a.vertices().begin(), a.vertices().end(),
                     [&](const auto& v) { return b.region_contains(v.first, v.second); });
}

Rational lojasiewicz_exponent(const Germ& f) { return exponent_report(f).l0; }

ExponentReport exponent_report(const Germ& f) {
  MultiplicityReport mult = multiplicity(f);
  ExponentReport report;
  report.m0 = mult.m0;
  std::optional<Rational> min_exp;
  for (int j = 0; j < f.dim(); ++j) {
    CharPoly cp = characteristic_polynomial(f, Poly::variable(f.ring(), j), mult);
    RelativeExponent re = relative_exponent(cp);
    if (!min_exp || re.value < *min_exp) min_exp = re.value;
    report.per_coordinate.push_back(std::move(re));
  }
  report.l0 = min_exp->inverse();
  report.l0_equals_m0 = jacobian_rank_at_zero(f) >= f.dim() - 1;
  return report;
}

Rational gradient_lojasiewicz(const Poly& h) { return lojasiewicz_exponent(gradient_germ(h)); }

}  // namespace germlab
