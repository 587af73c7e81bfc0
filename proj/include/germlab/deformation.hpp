#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "germlab/exponents.hpp"
#include "germlab/germ.hpp"

namespace germlab {

/// F(t, z) with F(0, z) a germ and F(t, 0) = 0, both enforced by exact
/// substitution at construction.
class DeformationFamily {
 public:
  DeformationFamily(std::vector<std::string> parameters, std::vector<std::string> variables,
                    std::vector<Poly> components /* in the (t, z) ring */);

  int param_count() const { return k_; }
  int dim() const { return n_; }
  const RingPtr& ring() const { return tz_ring_; }
  const RingPtr& germ_ring() const { return z_ring_; }
  const std::vector<Poly>& components() const { return components_; }

  Germ specialize(std::span<const Rational> tpoint) const;
  Germ base() const;

 private:
  int k_, n_;
  RingPtr tz_ring_;  // t1..tk, z1..zn
  RingPtr z_ring_;
  std::vector<Poly> components_;
};

/// Polynomial arc s -> (phi_1(s), ..., phi_n(s)), phi(0) = 0, phi != 0.
struct Arc {
  std::vector<Poly> components;  // in a one-variable ring
  explicit Arc(std::vector<Poly> comps);
  const RingPtr& ring() const { return components.front().ring(); }
};

struct ArcQuotient {
  bool finite = true;
  Rational value;           // ord(f . phi) / ord(phi) when finite
  long ord_composition = 0;  // valid when finite
  long ord_arc = 0;
  int truncation_degree = 0;  // arc degree bound; the composition is exact up to it
};

ArcQuotient arc_quotient(const Germ& f, const Arc& phi);

struct ConstancyProbe {
  bool constant = false;
  long base_m0 = 0;
  std::vector<std::optional<long>> per_point_m0;  // nullopt: specialization not finite
};

/// Exact multiplicities at the sample points (the base point t = 0 is always
/// included as samples entry 0 upstream). Violations of the multiplicity
/// upper-semicontinuity inequality are internal errors.
ConstancyProbe multiplicity_constancy_probe(const DeformationFamily& F,
                                            std::span<const std::vector<Rational>> tpoints);

enum class CheckStatus { holds, violated, not_applicable };

struct DeformationSample {
  std::vector<Rational> t;
  bool is_base = false;
  std::optional<long> m0;                         // nullopt: not finite
  std::optional<Rational> l0;
  bool l0_equals_m0 = false;
  std::vector<Rational> rel_exponents;            // one per h
  std::vector<NewtonPolygon> relative_polygons;   // sigma-image, one per h
};

struct SemicontinuityReport {
  std::vector<Poly> h_list;                // in the germ ring
  std::vector<DeformationSample> samples;  // samples[0] is the base point
  bool multiplicity_constant = false;
  CheckStatus l0_semicontinuity = CheckStatus::not_applicable;        // l0(F_0) <= l0(F_t)
  CheckStatus exponent_semicontinuity = CheckStatus::not_applicable;  // o_{F_t}(h) <= o_{F_0}(h)
  CheckStatus polygon_semicontinuity = CheckStatus::not_applicable;   // polygon shrinks toward t != 0
  std::optional<bool> nonzero_constancy;  // one-parameter families only
};

SemicontinuityReport semicontinuity_check(const DeformationFamily& F,
                                          std::span<const std::vector<Rational>> tpoints,
                                          const std::vector<Poly>* h_list = nullptr);

struct RankCriterionSample {
  std::vector<Rational> t;
  int rank = 0;
  long m0 = 0;  // equals l0 under the rank hypothesis
};

struct RankCriterionReport {
  std::vector<RankCriterionSample> samples;  // samples[0] is the base point
  bool upper_semicontinuous = false;         // l0(F_t) <= l0(F_0) at all samples
};

/// Verifies rank(dF/dz (t,0)) >= n-1 at every sample (throwing
/// hypothesis_fails otherwise) and reports the resulting l0 comparison.
RankCriterionReport rank_criterion_check(const DeformationFamily& F,
                                         std::span<const std::vector<Rational>> tpoints);

/// Default sample set {1, 1/2, -2, 3/5} as diagonal k-tuples, base point first.
std::vector<std::vector<Rational>> default_samples(int k);

}  // namespace germlab
