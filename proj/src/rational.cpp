#include "germlab/rational.hpp"

#include <cctype>
#include <ostream>

namespace germlab {

Rational::Rational(long num, long den) {
  if (den == 0) fail(Errc::invalid_input, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(Errc::invalid_input, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(Errc::invalid_input, "inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::from_parts(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(Errc::invalid_input, "rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::parse(const std::string& text) {
  // mpq_class's own parser accepts bases and whitespace we do not want;
  // validate shape first: [+-]digits[/digits]
  size_t i = 0;
  auto bad = [&]() { fail(Errc::invalid_input, "malformed rational '" + text + "'"); };
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) bad();
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i != text.size()) {
    if (text[i] != '/') bad();
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) bad();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size()) bad();
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) bad();
  if (q.get_den() == 0) fail(Errc::invalid_input, "rational with zero denominator");
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

}  // namespace germlab
