#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "germlab/monomial.hpp"
#include "germlab/rational.hpp"

namespace germlab {

/// Immutable variable-name context shared by polynomials.
class Ring {
 public:
  static std::shared_ptr<const Ring> make(std::vector<std::string> names);

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;

  bool same(const Ring& other) const { return this == &other || names_ == other.names_; }

 private:
  explicit Ring(std::vector<std::string> names);
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a->same(*b); }

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse exact-rational multivariate polynomial. Terms are kept sorted by
/// the canonical (plain lex) monomial order with no zero coefficients, so
/// equal polynomials compare equal structurally.
class Poly {
 public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, Rational c);
  static Poly variable(const RingPtr& ring, int index);
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);  // normalizes

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  std::span<const Term> terms() const { return terms_; }

  Rational coeff(const Monomial& m) const;
  Rational constant_term() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Largest total degree of a term; -1 for the zero polynomial.
  int total_degree() const;
  /// Smallest total degree of a term; +infinity for the zero polynomial.
  ExtendedCount ord() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;
  Poly shifted(const Monomial& m, const Rational& c) const;  // * c*m
  Poly pow(unsigned k) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative(int var) const;

  /// Exact composition. One assigned polynomial per ring variable; all
  /// assignments must live in one common target ring.
  Poly substitute(std::span<const Poly> assignment) const;

  /// Drops every term of total degree > bound.
  Poly truncate_above(int bound) const;

  /// Reinterprets the polynomial in `target`, sending variable i of this
  /// ring to variable var_map[i] of the target ring.
  Poly map_ring(const RingPtr& target, std::span<const int> var_map) const;

  /// Leading term under an arbitrary monomial order (linear scan).
  const Term& leading_term(const MonomialOrder& order) const;

  /// Integer-primitive rescaling: coefficients become coprime integers and
  /// the leading coefficient under `order` becomes positive.
  Poly primitive_normalized(const MonomialOrder& order) const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

inline ExtendedCount poly_ord(const Poly& p) { return p.ord(); }

}  // namespace germlab
