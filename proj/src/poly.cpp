#include "germlab/poly.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace germlab {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {}

std::shared_ptr<const Ring> Ring::make(std::vector<std::string> names) {
  if (names.empty() || names.size() > Monomial::kMaxVars)
    fail(Errc::invalid_input, "ring must have between 1 and 16 variables");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) fail(Errc::invalid_input, "empty variable name");
    if (!seen.insert(n).second) fail(Errc::invalid_input, "duplicate variable name '" + n + "'");
  }
  return std::shared_ptr<const Ring>(new Ring(std::move(names)));
}

std::optional<int> Ring::index_of(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

namespace {

void require_same_ring(const Poly& a, const Poly& b) {
  if (!same_ring(a.ring(), b.ring())) fail(Errc::invalid_input, "ring mismatch");
}

}  // namespace

Poly Poly::constant(RingPtr ring, Rational c) {
  Poly p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({Monomial(p.ring_->nvars()), std::move(c)});
  return p;
}

Poly Poly::variable(const RingPtr& ring, int index) {
  if (index < 0 || index >= ring->nvars()) fail(Errc::invalid_input, "variable index out of range");
  Monomial m(ring->nvars());
  m.set(index, 1);
  Poly p(ring);
  p.terms_.push_back({m, Rational(1)});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  for (auto& t : terms)
    if (t.mono.size() != p.ring_->nvars())
      fail(Errc::invalid_input, "monomial length does not match ring");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  for (auto& t : terms) {
    if (t.coef.is_zero()) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& mm) { return t.mono < mm; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return Rational(0);
}

Rational Poly::constant_term() const { return coeff(Monomial(ring_->nvars())); }

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

ExtendedCount Poly::ord() const {
  if (terms_.empty()) return ExtendedCount::infinity();
  int d = terms_[0].mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return ExtendedCount(d);
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coef});
  return r;
}

namespace {

// Merge of two term lists sorted by canonical monomial order.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].mono == b[j].mono) {
      Rational c = subtract ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i, ++j;
    } else if (a[i].mono < b[j].mono) {
      out.push_back(a[i]);
      ++i;
    } else {
      out.push_back({b[j].mono, subtract ? -b[j].coef : b[j].coef});
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, subtract ? -b[j].coef : b[j].coef});
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  require_same_ring(*this, o);
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_ring(*this, o);
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  r += b;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  r -= b;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  std::map<Monomial, Rational> acc;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Monomial m = ta.mono * tb.mono;
      auto it = acc.try_emplace(std::move(m), Rational(0)).first;
      it->second += ta.coef * tb.coef;
    }
  Poly r(a.ring_);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  if (c.is_zero()) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coef * c});
  return r;
}

Poly Poly::shifted(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return Poly(ring_);
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back({t.mono * m, t.coef * c});
  // multiplying by a fixed monomial preserves the lex ordering of terms
  Poly r(ring_);
  r.terms_ = std::move(ts);
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result = Poly::constant(ring_, Rational(1));
  Poly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Poly Poly::derivative(int var) const {
  if (var < 0 || var >= ring_->nvars()) fail(Errc::invalid_input, "variable index out of range");
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    ts.push_back({m, t.coef * Rational(static_cast<long>(e))});
  }
  return Poly::from_terms(ring_, std::move(ts));
}

Poly Poly::substitute(std::span<const Poly> assignment) const {
  if (static_cast<int>(assignment.size()) != ring_->nvars())
    fail(Errc::invalid_input, "substitution must assign every variable");
  if (assignment.empty()) fail(Errc::internal, "empty assignment");
  const RingPtr& target = assignment[0].ring();
  for (const auto& p : assignment)
    if (!same_ring(p.ring(), target)) fail(Errc::invalid_input, "assignment rings differ");

  // Cache successive powers per variable.
  std::vector<std::vector<Poly>> powers(ring_->nvars());
  auto power_of = [&](int var, unsigned e) -> const Poly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Poly::constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * assignment[var]);
    return cache[e];
  };

  Poly acc(target);
  for (const auto& t : terms_) {
    Poly term = Poly::constant(target, t.coef);
    for (int v = 0; v < ring_->nvars(); ++v) {
      unsigned e = t.mono[v];
      if (e) term = term * power_of(v, e);
    }
    acc += term;
  }
  return acc;
}

Poly Poly::truncate_above(int bound) const {
  std::vector<Term> ts;
  for (const auto& t : terms_)
    if (t.mono.degree() <= bound) ts.push_back(t);
  Poly r(ring_);
  r.terms_ = std::move(ts);
  return r;
}

Poly Poly::map_ring(const RingPtr& target, std::span<const int> var_map) const {
  if (static_cast<int>(var_map.size()) != ring_->nvars())
    fail(Errc::invalid_input, "variable map size mismatch");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (int v = 0; v < ring_->nvars(); ++v) {
      if (t.mono[v] == 0) continue;
      int tv = var_map[v];
      if (tv < 0 || tv >= target->nvars())
        fail(Errc::invalid_input, "variable map target out of range");
      m.set(tv, m[tv] + t.mono[v]);
    }
    ts.push_back({m, t.coef});
  }
  return Poly::from_terms(target, std::move(ts));
}

const Term& Poly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) fail(Errc::internal, "leading term of zero polynomial");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (mono_compare(order, t.mono, best->mono) > 0) best = &t;
  return *best;
}

Poly Poly::primitive_normalized(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    num_gcd = gcd(num_gcd, t.coef.numerator());
    den_lcm = lcm(den_lcm, t.coef.denominator());
  }
  Poly r = scaled(Rational::from_parts(den_lcm, num_gcd).abs());
  if (r.leading_term(order).coef.sign() < 0) r = -r;
  return r;
}

}  // namespace germlab
