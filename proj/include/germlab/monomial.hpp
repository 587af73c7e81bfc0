#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

#include "germlab/errors.hpp"

namespace germlab {

/// Exponent vector of fixed length (the ambient ring's variable count).
/// Capacity is a compile-time cap; rings larger than kMaxVars are rejected
/// at construction.
class Monomial {
 public:
  static constexpr int kMaxVars = 16;

  Monomial() : n_(0) {}
  explicit Monomial(int nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars < 0 || nvars > kMaxVars) fail(Errc::invalid_input, "unsupported variable count");
  }
  Monomial(std::initializer_list<unsigned> exps) : Monomial(static_cast<int>(exps.size())) {
    int i = 0;
    for (unsigned e : exps) e_[i++] = static_cast<std::uint16_t>(e);
  }

  int size() const { return n_; }
  unsigned operator[](int i) const { return e_[i]; }
  void set(int i, unsigned v) { e_[i] = static_cast<std::uint16_t>(v); }

  int degree() const {
    int d = 0;
    for (int i = 0; i < n_; ++i) d += e_[i];
    return d;
  }

  bool is_one() const {
    for (int i = 0; i < n_; ++i)
      if (e_[i]) return false;
    return true;
  }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < n_; ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& m) const {
    for (int i = 0; i < n_; ++i)
      if (e_[i] && m.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(n_);
    for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] + m.e_[i]);
    return r;
  }

  /// Exact quotient; caller guarantees m.divides(*this).
  Monomial operator/(const Monomial& m) const {
    Monomial r(n_);
    for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - m.e_[i]);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (int i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  /// Plain lexicographic comparison on exponent vectors. This is the
  /// canonical storage order of Poly terms, independent of any active
  /// monomial order.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.n_; ++i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
    return false;
  }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_;
};

enum class OrderKind {
  lex,
  degrevlex,
  block_elimination,   // degrevlex on a leading variable block, then degrevlex on the rest
  local_antigraded,    // "ds": lower total degree is larger; ties by reverse lex
};

struct MonomialOrder {
  OrderKind kind = OrderKind::degrevlex;
  int block = 0;  // leading-block size for block_elimination

  bool is_global() const { return kind != OrderKind::local_antigraded; }
  bool is_local() const { return kind == OrderKind::local_antigraded; }

  static MonomialOrder Lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder DegRevLex() { return {OrderKind::degrevlex, 0}; }
  static MonomialOrder BlockElimination(int front) { return {OrderKind::block_elimination, front}; }
  static MonomialOrder LocalAntigraded() { return {OrderKind::local_antigraded, 0}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// -1, 0, +1 for m1 < m2, m1 == m2, m1 > m2 under the given order.
int mono_compare(const MonomialOrder& order, const Monomial& m1, const Monomial& m2);

}  // namespace germlab
