#pragma once

#include <span>
#include <vector>

#include "germlab/poly.hpp"

namespace germlab {

struct IdealBasis {
  std::vector<Poly> generators;  // nonzero, all in one ring
  MonomialOrder order;

  IdealBasis(std::vector<Poly> gens, MonomialOrder ord);
  const RingPtr& ring() const { return generators.front().ring(); }
};

struct StandardBasis {
  std::vector<Poly> elements;              // normalized, sorted by leading monomial
  MonomialOrder order;
  std::vector<Monomial> leading_monomials;  // pairwise non-divisible
  RingPtr ring;
};

/// Reduced Groebner basis under a global order (lex, degrevlex, block
/// elimination). Deterministic: integer-primitive elements with positive
/// leading coefficient, sorted by leading monomial.
StandardBasis buchberger(const IdealBasis& basis);

/// Standard basis under the local antigraded order via Mora's tangent-cone
/// algorithm. Elements are head-minimal but not tail-reduced.
StandardBasis standard_basis(const IdealBasis& basis);

/// Full normal form (head and tail) under a global order.
Poly normal_form(const Poly& p, std::span<const Poly> basis, const MonomialOrder& order);

/// Mora weak normal form under the local antigraded order: some unit u with
/// u*p - result in <basis>, and the leading monomial of the result divisible
/// by no basis leading monomial. The tail is not reduced.
Poly mora_normal_form(const Poly& p, std::span<const Poly> basis, const MonomialOrder& order);

/// Number of monomials outside the leading ideal; +infinity when some
/// variable has no pure power among the leading monomials.
ExtendedCount staircase_dimension(const StandardBasis& sb);

}  // namespace germlab
