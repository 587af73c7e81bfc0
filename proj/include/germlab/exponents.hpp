#pragma once

#include <utility>
#include <vector>

#include "germlab/charpoly.hpp"
#include "germlab/germ.hpp"

namespace germlab {

/// o_f(h) together with the coefficient witnessing the minimum:
/// value = witness_order / witness_index.
struct RelativeExponent {
  Rational value;
  int witness_index = 0;
  long witness_order = 0;
};

RelativeExponent relative_exponent(const CharPoly& p);

/// Lower-left staircase hull: vertices with strictly increasing x, strictly
/// decreasing y, strictly increasing edge inclinations |dx|/|dy|, first
/// vertex on the vertical axis.
class NewtonPolygon {
 public:
  explicit NewtonPolygon(std::vector<std::pair<long, long>> vertices);

  /// Hull of the up-right closures of a point set.
  static NewtonPolygon from_points(std::vector<std::pair<long, long>> points);

  const std::vector<std::pair<long, long>>& vertices() const { return v_; }
  std::vector<Rational> edge_inclinations() const;

  /// Membership in the up-right closed region spanned by the polygon.
  bool region_contains(long x, long y) const;

  NewtonPolygon dilated(long factor) const;

  friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) { return a.v_ == b.v_; }
  friend bool operator!=(const NewtonPolygon& a, const NewtonPolygon& b) { return !(a == b); }

 private:
  std::vector<std::pair<long, long>> v_;
};

/// Newton polygon of P taken from Q's coefficient orders and dilated by r.
NewtonPolygon newton_polygon(const CharPoly& p);

/// First-side inclination; equals relative_exponent(p).value.
Rational theta(const CharPoly& p);

/// Coordinate swap (alpha, beta) -> (beta, alpha); an involution.
NewtonPolygon sigma(const NewtonPolygon& p);

/// Inclination of the edge ending on the horizontal axis. Throws degenerate
/// on single-vertex polygons.
Rational last_edge_inclination(const NewtonPolygon& p);

/// region(a) subset of region(b), decided on a's vertices.
bool polygon_includes(const NewtonPolygon& a, const NewtonPolygon& b);

/// l0(f) = 1 / min_j o_f(z_j).
Rational lojasiewicz_exponent(const Germ& f);

struct ExponentReport {
  long m0 = 0;
  Rational l0;
  std::vector<RelativeExponent> per_coordinate;  // indexed like the germ variables
  bool l0_equals_m0 = false;
};

ExponentReport exponent_report(const Germ& f);

/// l0 of the gradient germ of h.
Rational gradient_lojasiewicz(const Poly& h);

}  // namespace germlab
