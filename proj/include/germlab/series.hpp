#pragma once

#include "germlab/poly.hpp"

namespace germlab {

/// Polynomial truncation of a power series: the body never carries a term of
/// total degree above the truncation bound, and arithmetic discards everything
/// beyond it.
class TruncatedSeries {
 public:
  TruncatedSeries(Poly body, int truncation)
      : body_(body.truncate_above(truncation)), trunc_(truncation) {
    if (truncation < 1) fail(Errc::invalid_input, "truncation must be positive");
  }

  const Poly& body() const { return body_; }
  int truncation() const { return trunc_; }

  friend TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.trunc_, b.trunc_);
    return TruncatedSeries(a.body_ * b.body_, n);
  }

  friend TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.trunc_, b.trunc_);
    return TruncatedSeries(a.body_ + b.body_, n);
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.trunc_ == b.trunc_ && a.body_ == b.body_;
  }

 private:
  Poly body_;
  int trunc_;
};

}  // namespace germlab
