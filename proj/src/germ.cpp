#include "germlab/germ.hpp"

#include <algorithm>

namespace germlab {

Germ::Germ(RingPtr ring, std::vector<Poly> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  if (static_cast<int>(components_.size()) != ring_->nvars())
    fail(Errc::invalid_input, "germ needs exactly one component per variable");
  for (const auto& c : components_) {
    if (!same_ring(c.ring(), ring_)) fail(Errc::invalid_input, "component in wrong ring");
    if (!c.constant_term().is_zero())
      fail(Errc::invalid_input, "germ component has a nonzero constant term");
  }
}

Germ Germ::identity(const RingPtr& ring) {
  std::vector<Poly> comps;
  for (int i = 0; i < ring->nvars(); ++i) comps.push_back(Poly::variable(ring, i));
  return Germ(ring, std::move(comps));
}

MultiplicityReport multiplicity(const Germ& f) {
  std::vector<Poly> gens;
  for (const auto& c : f.components())
    if (!c.is_zero()) gens.push_back(c);
  if (gens.empty()) fail(Errc::not_finite, "zero germ has no isolated zero");

  StandardBasis sb = standard_basis(IdealBasis(std::move(gens), MonomialOrder::LocalAntigraded()));
  ExtendedCount dim = staircase_dimension(sb);
  if (dim.is_infinite())
    fail(Errc::not_finite, "germ has a non-isolated zero (infinite staircase)");
  return {dim.value(), sb.leading_monomials};
}

namespace {

int rank_over_q(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  for (size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    size_t pivot = rows;
    for (size_t r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == static_cast<size_t>(rank) || m[r][c].is_zero()) continue;
      Rational factor = m[r][c] / m[rank][c];
      for (size_t cc = c; cc < cols; ++cc) m[r][cc] -= factor * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int jacobian_rank_at_zero(const Germ& f) {
  const int n = f.dim();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Monomial zj(n);
      zj.set(j, 1);
      m[i][j] = f.component(i).coeff(zj);
    }
  return rank_over_q(std::move(m));
}

bool l0_equals_m0_criterion(const Germ& f) {
  multiplicity(f);  // propagate not_finite; the criterion is meaningless otherwise
  return jacobian_rank_at_zero(f) >= f.dim() - 1;
}

Germ gradient_germ(const Poly& h) {
  if (!h.constant_term().is_zero()) fail(Errc::invalid_input, "h must vanish at the origin");
  const RingPtr& ring = h.ring();
  std::vector<Poly> comps;
  for (int v = 0; v < ring->nvars(); ++v) {
    Poly d = h.derivative(v);
    if (!d.constant_term().is_zero())
      fail(Errc::not_singular, "gradient does not vanish at the origin (h is not singular)");
    comps.push_back(std::move(d));
  }
  return Germ(ring, std::move(comps));
}

}  // namespace germlab
