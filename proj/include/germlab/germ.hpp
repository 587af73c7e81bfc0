#pragma once

#include <vector>

#include "germlab/ideal.hpp"
#include "germlab/poly.hpp"

namespace germlab {

/// A polynomial map germ: n components in n variables, every component
/// vanishing at the origin. Finiteness (isolated zero) is a runtime check,
/// not an assumption.
class Germ {
 public:
  Germ(RingPtr ring, std::vector<Poly> components);

  int dim() const { return static_cast<int>(components_.size()); }
  const RingPtr& ring() const { return ring_; }
  const Poly& component(int i) const { return components_[i]; }
  const std::vector<Poly>& components() const { return components_; }

  static Germ identity(const RingPtr& ring);

 private:
  RingPtr ring_;
  std::vector<Poly> components_;
};

struct MultiplicityReport {
  long m0 = 0;
  std::vector<Monomial> leading_ideal;  // minimal generators of the local leading ideal
};

/// m0 = staircase dimension of the local standard basis. Throws not_finite
/// when the staircase is infinite.
MultiplicityReport multiplicity(const Germ& f);

/// Exact rank over Q of the linear-term coefficient matrix.
int jacobian_rank_at_zero(const Germ& f);

/// True iff the Jacobian rank at 0 is >= n-1; exactly then the Lojasiewicz
/// exponent equals the multiplicity. Requires a finite germ.
bool l0_equals_m0_criterion(const Germ& f);

/// Germ of partial derivatives of h. Throws not_singular when some partial
/// derivative has a nonzero constant term.
Germ gradient_germ(const Poly& h);

}  // namespace germlab
