#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "germlab/errors.hpp"

namespace germlab {

/// Exact arbitrary-precision rational. Always stored reduced, denominator >= 1,
/// canonical zero is 0/1. Backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit integer promotion is intended
  Rational(long num, long den);

  /// Accepts "p", "-p", "p/q" with optional sign on the numerator.
  static Rational parse(const std::string& text);

  static Rational from_parts(const mpz_class& num, const mpz_class& den);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// "p/q" for non-integers, "p" otherwise; always reduced.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

/// value/inf pair used for vanishing orders and staircase counts.
/// Addition and min follow the usual conventions with +infinity absorbing.
class ExtendedCount {
 public:
  ExtendedCount() : v_(0), inf_(false) {}
  explicit ExtendedCount(long v) : v_(v), inf_(false) {}
  static ExtendedCount infinity() {
    ExtendedCount e;
    e.inf_ = true;
    return e;
  }

  bool is_infinite() const { return inf_; }
  long value() const {
    if (inf_) fail(Errc::internal, "value() on +infinity");
    return v_;
  }

  friend ExtendedCount operator+(const ExtendedCount& a, const ExtendedCount& b) {
    if (a.inf_ || b.inf_) return infinity();
    return ExtendedCount(a.v_ + b.v_);
  }

  friend bool operator==(const ExtendedCount& a, const ExtendedCount& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend bool operator<(const ExtendedCount& a, const ExtendedCount& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ExtendedCount& a, const ExtendedCount& b) { return a == b || a < b; }

  static ExtendedCount min(const ExtendedCount& a, const ExtendedCount& b) { return a < b ? a : b; }

  std::string str() const { return inf_ ? "+inf" : std::to_string(v_); }

 private:
  long v_;
  bool inf_;
};

}  // namespace germlab
