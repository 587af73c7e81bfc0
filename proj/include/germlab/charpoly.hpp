#pragma once

#include <optional>
#include <vector>

#include "germlab/germ.hpp"
#include "germlab/poly.hpp"

namespace germlab {

/// Generator of the elimination ideal <w1-f1,...,wn-fn, s-h> ∩ Q[w,s].
/// The generator lives in a fresh ring (w1..wn, s), integer-primitive with
/// positive leading coefficient.
struct EliminantReport {
  Poly g;
  bool principal = true;
  bool distinguished_fast_path = false;
};

EliminantReport eliminant(const Germ& f, const Poly& h);

/// Distinguished Weierstrass factor of g at the origin, obtained by Hensel
/// lifting the split g(0,s) = s^k * (unit cofactor) up to total w-degree
/// `truncation` (default max(1, ord_h) * m0). coeffs are a_1..a_k.
struct DistinguishedFactor {
  std::vector<Poly> coeffs;
  int degree = 0;
  int truncation = 0;
  RingPtr w_ring;
};

DistinguishedFactor weierstrass_distinguished_factor(const Poly& g_ws, long m0, int ord_h,
                                                     std::optional<int> truncation = {});

/// Monic distinguished polynomial P = Q^r in Q[[w]][s] with Q the minimal
/// polynomial of h relative to f, deg_s P = m0(f). Q's coefficients are exact
/// polynomials on the fast path and truncated series (recorded truncation)
/// on the Hensel path.
class CharPoly {
 public:
  const RingPtr& w_ring() const { return w_ring_; }
  const RingPtr& ws_ring() const { return ws_ring_; }

  long full_degree() const { return m0_; }      // deg_s P = m0(f)
  int min_degree() const { return min_deg_; }   // deg_s Q
  int power() const { return r_; }              // P = Q^r
  bool exact() const { return exact_; }
  int truncation() const { return truncation_; }  // valid when !exact()

  /// a_1..a_{min_degree} of Q.
  const std::vector<Poly>& coefficients() const { return coeffs_; }

  Poly q_as_poly() const;
  Poly p_as_poly() const;                    // expands Q^r; exact polynomials only
  std::vector<Poly> p_coefficients() const;  // b_1..b_{m0} of P; exact only

  struct MinRatio {
    Rational value;
    int index;   // witness i
    long order;  // ord a_i
  };

  /// min over nonzero a_i of ord(a_i)/i. On truncated data the value is
  /// certified only when it cannot be beaten by coefficients hidden above the
  /// truncation; nullopt means the truncation was too small.
  std::optional<MinRatio> certified_min_ratio() const;

  static CharPoly make(RingPtr w_ring, RingPtr ws_ring, long m0, std::vector<Poly> q_coeffs,
                       bool exact, int truncation);

 private:
  CharPoly() = default;
  RingPtr w_ring_, ws_ring_;
  long m0_ = 0;
  int min_deg_ = 0;
  int r_ = 1;
  bool exact_ = true;
  int truncation_ = 0;
  std::vector<Poly> coeffs_;
};

CharPoly characteristic_polynomial(const Germ& f, const Poly& h);
CharPoly characteristic_polynomial(const Germ& f, const Poly& h, const MultiplicityReport& mult,
                                   std::optional<int> truncation_override = {});

/// Rejects (f, h) whose affine common zero set is larger than the origin:
/// for every variable the univariate eliminant of <f, h> must be a pure
/// power. Throws clean_fiber_violation.
void require_clean_fiber(const Germ& f, const Poly& h);

}  // namespace germlab
