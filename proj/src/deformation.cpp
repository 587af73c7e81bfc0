#include "germlab/deformation.hpp"

#include <algorithm>

namespace germlab {

namespace {

bool is_zero_point(std::span<const Rational> t) {
  return std::all_of(t.begin(), t.end(), [](const Rational& r) { return r.is_zero(); });
}

}  // namespace

DeformationFamily::DeformationFamily(std::vector<std::string> parameters,
                                     std::vector<std::string> variables,
                                     std::vector<Poly> components)
    : k_(static_cast<int>(parameters.size())), n_(static_cast<int>(variables.size())) {
  if (k_ < 1) fail(Errc::invalid_input, "a deformation needs at least one parameter");
  if (n_ < 1) fail(Errc::invalid_input, "a deformation needs at least one variable");
  if (static_cast<int>(components.size()) != n_)
    fail(Errc::invalid_input, "family needs exactly one component per variable");

  std::vector<std::string> tz = parameters;
  tz.insert(tz.end(), variables.begin(), variables.end());
  tz_ring_ = Ring::make(std::move(tz));
  z_ring_ = Ring::make(std::move(variables));
  for (const auto& c : components)
    if (!same_ring(c.ring(), tz_ring_)) fail(Errc::invalid_input, "component in wrong ring");
  components_ = std::move(components);

  // F(t, 0) = 0 identically.
  RingPtr t_ring = Ring::make(std::vector<std::string>(tz_ring_->names().begin(),
                                                       tz_ring_->names().begin() + k_));
  std::vector<Poly> to_t;
  for (int i = 0; i < k_; ++i) to_t.push_back(Poly::variable(t_ring, i));
  for (int i = 0; i < n_; ++i) to_t.push_back(Poly::zero(t_ring));
  for (const auto& c : components_)
    if (!c.substitute(to_t).is_zero())
      fail(Errc::invalid_input, "family does not satisfy F(t, 0) = 0");

  base();  // F(0, z) must be a valid germ
}

Germ DeformationFamily::specialize(std::span<const Rational> tpoint) const {
  if (static_cast<int>(tpoint.size()) != k_)
    fail(Errc::invalid_input, "sample point has wrong parameter count");
  std::vector<Poly> assignment;
  for (int i = 0; i < k_; ++i) assignment.push_back(Poly::constant(z_ring_, tpoint[i]));
  for (int i = 0; i < n_; ++i) assignment.push_back(Poly::variable(z_ring_, i));
  std::vector<Poly> comps;
  for (const auto& c : components_) comps.push_back(c.substitute(assignment));
  return Germ(z_ring_, std::move(comps));
}

Germ DeformationFamily::base() const {
  return specialize(std::vector<Rational>(k_, Rational(0)));
}

Arc::Arc(std::vector<Poly> comps) : components(std::move(comps)) {
  if (components.empty()) fail(Errc::invalid_input, "empty arc");
  const RingPtr& r = components.front().ring();
  if (r->nvars() != 1) fail(Errc::invalid_input, "arc components must be univariate");
  bool all_zero = true;
  for (const auto& c : components) {
    if (!same_ring(c.ring(), r)) fail(Errc::invalid_input, "arc components in different rings");
    if (!c.constant_term().is_zero()) fail(Errc::invalid_input, "arc must satisfy phi(0) = 0");
    if (!c.is_zero()) all_zero = false;
  }
  if (all_zero) fail(Errc::invalid_input, "arc must be nonzero");
}

ArcQuotient arc_quotient(const Germ& f, const Arc& phi) {
  if (static_cast<int>(phi.components.size()) != f.dim())
    fail(Errc::invalid_input, "arc dimension does not match the germ");

  ArcQuotient out;
  ExtendedCount ord_phi = ExtendedCount::infinity();
  int max_deg = 0;
  for (const auto& c : phi.components) {
    ord_phi = ExtendedCount::min(ord_phi, c.ord());
    max_deg = std::max(max_deg, c.total_degree());
  }
  out.ord_arc = ord_phi.value();
  out.truncation_degree = max_deg;

  ExtendedCount ord_comp = ExtendedCount::infinity();
  for (const auto& c : f.components())
    ord_comp = ExtendedCount::min(ord_comp, c.substitute(phi.components).ord());

  if (ord_comp.is_infinite()) {
    out.finite = false;
    return out;
  }
  out.finite = true;
  out.ord_composition = ord_comp.value();
  out.value = Rational(ord_comp.value(), out.ord_arc);
  return out;
}

ConstancyProbe multiplicity_constancy_probe(const DeformationFamily& F,
                                            std::span<const std::vector<Rational>> tpoints) {
  if (tpoints.empty()) fail(Errc::invalid_input, "no sample points");
  ConstancyProbe probe;
  probe.base_m0 = multiplicity(F.base()).m0;
  probe.constant = true;
  for (const auto& t : tpoints) {
    std::optional<long> m0;
    try {
      m0 = multiplicity(F.specialize(t)).m0;
    } catch (const Error& e) {
      if (e.code() != Errc::not_finite) throw;
    }
    if (!m0) {
      probe.constant = false;
    } else {
      if (*m0 > probe.base_m0)
        fail(Errc::internal, "multiplicity rose from " + std::to_string(probe.base_m0) + " to " +
                                 std::to_string(*m0) + " at a sample; semicontinuity violated");
      if (*m0 != probe.base_m0) probe.constant = false;
    }
    probe.per_point_m0.push_back(m0);
  }
  return probe;
}

namespace {

// Sample points with the base point first, duplicates removed.
std::vector<std::vector<Rational>> with_base_first(const DeformationFamily& F,
                                                   std::span<const std::vector<Rational>> tpoints) {
  std::vector<std::vector<Rational>> pts;
  pts.emplace_back(F.param_count(), Rational(0));
  for (const auto& t : tpoints) {
    if (static_cast<int>(t.size()) != F.param_count())
      fail(Errc::invalid_input, "sample point has wrong parameter count");
    if (std::find(pts.begin(), pts.end(), t) == pts.end()) pts.push_back(t);
  }
  return pts;
}

}  // namespace

std::vector<std::vector<Rational>> default_samples(int k) {
  std::vector<Rational> values = {Rational(1), Rational(1, 2), Rational(-2), Rational(3, 5)};
  std::vector<std::vector<Rational>> pts;
  for (const auto& v : values) pts.emplace_back(k, v);
  return pts;
}

SemicontinuityReport semicontinuity_check(const DeformationFamily& F,
                                          std::span<const std::vector<Rational>> tpoints,
                                          const std::vector<Poly>* h_list) {
  SemicontinuityReport report;
  if (h_list) {
    for (const auto& h : *h_list) {
      if (!same_ring(h.ring(), F.germ_ring()))
        fail(Errc::invalid_input, "h must live in the germ variables");
      report.h_list.push_back(h);
    }
    if (report.h_list.empty()) fail(Errc::invalid_input, "empty h list");
  } else {
    for (int j = 0; j < F.dim(); ++j)
      report.h_list.push_back(Poly::variable(F.germ_ring(), j));
  }

  auto pts = with_base_first(F, tpoints);
  ConstancyProbe probe = multiplicity_constancy_probe(F, pts);
  report.multiplicity_constant = probe.constant;

  for (size_t i = 0; i < pts.size(); ++i) {
    DeformationSample sample;
    sample.t = pts[i];
    sample.is_base = is_zero_point(pts[i]);
    sample.m0 = probe.per_point_m0[i];
    if (sample.m0) {
      Germ g = F.specialize(pts[i]);
      MultiplicityReport mult{*sample.m0, {}};
      std::optional<Rational> min_exp;
      for (const auto& h : report.h_list) {
        CharPoly cp = characteristic_polynomial(g, h, mult);
        RelativeExponent re = relative_exponent(cp);
        sample.rel_exponents.push_back(re.value);
        sample.relative_polygons.push_back(sigma(newton_polygon(cp)));
        if (!min_exp || re.value < *min_exp) min_exp = re.value;
      }
      // With h defaulting to the coordinate functions this is l0; for a
      // custom h list it is still reported per sample but l0 is recomputed
      // from the coordinates.
      if (h_list) {
        sample.l0 = lojasiewicz_exponent(g);
      } else {
        sample.l0 = min_exp->inverse();
      }
      sample.l0_equals_m0 = jacobian_rank_at_zero(g) >= F.dim() - 1;
    }
    report.samples.push_back(std::move(sample));
  }

  if (!probe.constant) return report;  // theorems make no claim; leave not_applicable

  const DeformationSample& base = report.samples.front();
  bool l0_ok = true, exp_ok = true, poly_ok = true;
  bool constancy = true;
  const DeformationSample* first_nonzero = nullptr;
  for (size_t i = 1; i < report.samples.size(); ++i) {
    const DeformationSample& s = report.samples[i];
    if (s.is_base) continue;
    if (*base.l0 > *s.l0) l0_ok = false;
    for (size_t j = 0; j < report.h_list.size(); ++j) {
      if (s.rel_exponents[j] > base.rel_exponents[j]) exp_ok = false;
      // The polygon over t != 0 can only grow as a region: the base polygon
      // region must be contained in it.
      if (!polygon_includes(base.relative_polygons[j], s.relative_polygons[j])) poly_ok = false;
    }
    if (!first_nonzero) {
      first_nonzero = &s;
    } else {
      if (s.l0 != first_nonzero->l0 || s.rel_exponents != first_nonzero->rel_exponents ||
          s.relative_polygons != first_nonzero->relative_polygons)
        constancy = false;
    }
  }
  report.l0_semicontinuity = l0_ok ? CheckStatus::holds : CheckStatus::violated;
  report.exponent_semicontinuity = exp_ok ? CheckStatus::holds : CheckStatus::violated;
  report.polygon_semicontinuity = poly_ok ? CheckStatus::holds : CheckStatus::violated;
  if (F.param_count() == 1 && first_nonzero) report.nonzero_constancy = constancy;
  return report;
}

RankCriterionReport rank_criterion_check(const DeformationFamily& F,
                                         std::span<const std::vector<Rational>> tpoints) {
  auto pts = with_base_first(F, tpoints);
  const int n = F.dim(), k = F.param_count();

  RankCriterionReport report;
  for (const auto& t : pts) {
    // dF_i/dz_j evaluated at (t, 0), exactly.
    RingPtr scalar = Ring::make({"u"});  // evaluation happens via constant substitution
    std::vector<Poly> at_point;
    for (int i = 0; i < k; ++i) at_point.push_back(Poly::constant(scalar, t[i]));
    for (int i = 0; i < n; ++i) at_point.push_back(Poly::zero(scalar));

    std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Poly d = F.components()[i].derivative(k + j).substitute(at_point);
        mat[i][j] = d.constant_term();
      }
    int rank = 0;
    for (int c = 0; c < n && rank < n; ++c) {
      int pivot = -1;
      for (int r = rank; r < n; ++r)
        if (!mat[r][c].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(mat[rank], mat[pivot]);
      for (int r = 0; r < n; ++r) {
        if (r == rank || mat[r][c].is_zero()) continue;
        Rational factor = mat[r][c] / mat[rank][c];
        for (int cc = c; cc < n; ++cc) mat[r][cc] -= factor * mat[rank][cc];
      }
      ++rank;
    }

    if (rank < n - 1) {
      std::string point = "(";
      for (size_t i = 0; i < t.size(); ++i) point += (i ? "," : "") + t[i].str();
      point += ")";
      fail(Errc::hypothesis_fails, "Jacobian rank " + std::to_string(rank) + " < " +
                                       std::to_string(n - 1) + " at sample " + point);
    }
    RankCriterionSample s;
    s.t = t;
    s.rank = rank;
    s.m0 = multiplicity(F.specialize(t)).m0;  // equals l0 under the rank hypothesis
    report.samples.push_back(std::move(s));
  }

  long base_l0 = report.samples.front().m0;
  report.upper_semicontinuous =
      std::all_of(report.samples.begin(), report.samples.end(),
                  [&](const RankCriterionSample& s) { return s.m0 <= base_l0; });
  return report;
}

}  // namespace germlab
