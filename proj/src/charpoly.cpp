#include "germlab/charpoly.hpp"

#include <algorithm>

#include "germlab/ideal.hpp"

namespace germlab {

namespace {

RingPtr make_w_ring(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("w" + std::to_string(i));
  return Ring::make(std::move(names));
}

RingPtr make_ws_ring(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("w" + std::to_string(i));
  names.push_back("s");
  return Ring::make(std::move(names));
}

int s_degree(const Poly& g, int s_index) {
  int d = 0;
  for (const auto& t : g.terms()) d = std::max(d, static_cast<int>(t.mono[s_index]));
  return d;
}

// Coefficients of g as a polynomial in s, each in the w-ring.
std::vector<Poly> split_by_s(const Poly& g, const RingPtr& w_ring) {
  int s_index = g.ring()->nvars() - 1;
  int m = s_degree(g, s_index);
  std::vector<std::vector<Term>> buckets(m + 1);
  for (const auto& t : g.terms()) {
    Monomial wm(w_ring->nvars());
    for (int v = 0; v < s_index; ++v) wm.set(v, t.mono[v]);
    buckets[t.mono[s_index]].push_back({wm, t.coef});
  }
  std::vector<Poly> out;
  out.reserve(m + 1);
  for (auto& b : buckets) out.push_back(Poly::from_terms(w_ring, std::move(b)));
  return out;
}

Poly join_by_s(const std::vector<Poly>& coeffs, const RingPtr& ws_ring) {
  std::vector<Term> ts;
  int n = ws_ring->nvars() - 1;
  for (size_t j = 0; j < coeffs.size(); ++j)
    for (const auto& t : coeffs[j].terms()) {
      Monomial m(ws_ring->nvars());
      for (int v = 0; v < n; ++v) m.set(v, t.mono[v]);
      m.set(n, static_cast<unsigned>(j));
      ts.push_back({m, t.coef});
    }
  return Poly::from_terms(ws_ring, std::move(ts));
}

// True iff g is monic-up-to-constant in s with every lower coefficient
// vanishing at w = 0.
bool is_distinguished(const std::vector<Poly>& coeffs) {
  const Poly& lead = coeffs.back();
  if (!lead.is_constant() || lead.is_zero()) return false;
  for (size_t j = 0; j + 1 < coeffs.size(); ++j)
    if (!coeffs[j].constant_term().is_zero()) return false;
  return true;
}

// ---- univariate helpers over Q (used for the squarefree witness) ----

using UniPoly = std::vector<Rational>;  // coefficient list, index = power

int uni_degree(const UniPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  int db = uni_degree(b);
  for (int da = uni_degree(a); da >= db && da >= 0; da = uni_degree(a)) {
    Rational q = a[da] / b[db];
    for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
    a[da] = Rational(0);  // guard against residue from exact cancellation
  }
  return a;
}

int uni_gcd_degree(UniPoly a, UniPoly b) {
  while (uni_degree(b) >= 0) {
    UniPoly r = uni_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return uni_degree(a);
}

UniPoly specialize_at(const Poly& g, int s_index, const std::vector<Rational>& w_point) {
  UniPoly out(s_degree(g, s_index) + 1, Rational(0));
  for (const auto& t : g.terms()) {
    Rational v = t.coef;
    for (int i = 0; i < s_index; ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= w_point[i];
    out[t.mono[s_index]] += v;
  }
  return out;
}

// Exact witness that gcd(g, dg/ds) is constant over Q(w): a single rational
// specialization of the w-variables with coprime image certifies it. The
// generator of a principal prime elimination ideal is irreducible, so a
// genuinely squarefree g always has such a witness among generic points.
void require_squarefree(const Poly& g) {
  int s_index = g.ring()->nvars() - 1;
  Poly gs = g.derivative(s_index);
  if (gs.is_zero()) fail(Errc::validation_failed, "eliminant does not depend on s");
  for (long trial = 1; trial <= 24; ++trial) {
    std::vector<Rational> point;
    for (int i = 0; i < s_index; ++i) point.push_back(Rational(trial + i * (trial % 3 + 1)));
    UniPoly a = specialize_at(g, s_index, point);
    UniPoly b = specialize_at(gs, s_index, point);
    if (uni_degree(a) < 1) continue;
    if (uni_gcd_degree(std::move(a), std::move(b)) == 0) return;
  }
  fail(Errc::validation_failed, "eliminant is not squarefree");
}

}  // namespace

EliminantReport eliminant(const Germ& f, const Poly& h) {
  const int n = f.dim();
  if (!same_ring(h.ring(), f.ring())) fail(Errc::invalid_input, "h must live in the germ's ring");
  if (h.is_zero()) fail(Errc::invalid_input, "h must be nonzero");
  if (!h.constant_term().is_zero()) fail(Errc::invalid_input, "h must vanish at the origin");

  // Elimination ring: the germ variables first (to be eliminated), then
  // w1..wn and s. Germ variable names get a reserved prefix so they can
  // never collide with the output names.
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("#" + f.ring()->name(i));
  for (int i = 1; i <= n; ++i) names.push_back("w" + std::to_string(i));
  names.push_back("s");
  RingPtr ering = Ring::make(std::move(names));

  std::vector<int> zmap(n);
  for (int i = 0; i < n; ++i) zmap[i] = i;

  std::vector<Poly> gens;
  for (int i = 0; i < n; ++i)
    gens.push_back(Poly::variable(ering, n + i) - f.component(i).map_ring(ering, zmap));
  gens.push_back(Poly::variable(ering, 2 * n) - h.map_ring(ering, zmap));

  StandardBasis gb = buchberger(IdealBasis(std::move(gens), MonomialOrder::BlockElimination(n)));

  auto z_free = [&](const Poly& p) {
    for (const auto& t : p.terms())
      for (int v = 0; v < n; ++v)
        if (t.mono[v]) return false;
    return true;
  };

  std::vector<const Poly*> kept;
  for (const auto& e : gb.elements)
    if (z_free(e)) kept.push_back(&e);
  if (kept.size() != 1)
    fail(Errc::not_principal, "elimination ideal is generated by " + std::to_string(kept.size()) +
                                  " elements; expected a single hypersurface equation");

  RingPtr ws = make_ws_ring(n);
  std::vector<int> wsmap(2 * n + 1);
  for (int i = 0; i < n; ++i) wsmap[i] = 0;  // unused (z-free)
  for (int i = 0; i <= n; ++i) wsmap[n + i] = i;
  Poly g = kept.front()->map_ring(ws, wsmap).primitive_normalized(MonomialOrder::DegRevLex());
  bool fast = is_distinguished(split_by_s(g, make_w_ring(n)));
  return EliminantReport{std::move(g), /*principal=*/true, fast};
}

DistinguishedFactor weierstrass_distinguished_factor(const Poly& g_ws, long m0, int ord_h,
                                                     std::optional<int> truncation) {
  const RingPtr& ws = g_ws.ring();
  const int n = ws->nvars() - 1;
  RingPtr w_ring = make_w_ring(n);
  const int N = truncation.value_or(static_cast<int>(std::max(1, ord_h) * m0));
  if (N < 1) fail(Errc::invalid_input, "truncation must be positive");

  std::vector<Poly> c = split_by_s(g_ws, w_ring);
  const int m = static_cast<int>(c.size()) - 1;
  if (m < 1) fail(Errc::not_distinguishable, "eliminant does not depend on s");

  // Split g(0,s) = s^k * e(s) with e(0) != 0.
  std::vector<Rational> g0(m + 1, Rational(0));
  bool any = false;
  for (int j = 0; j <= m; ++j) {
    g0[j] = c[j].constant_term();
    if (!g0[j].is_zero()) any = true;
  }
  if (!any)
    fail(Errc::not_distinguishable, "eliminant vanishes identically at w = 0");
  int k = 0;
  while (g0[k].is_zero()) ++k;
  if (k == 0)
    fail(Errc::not_distinguishable, "eliminant does not vanish at the origin");
  if (m0 % k != 0)
    fail(Errc::validation_failed, "distinguished factor degree " + std::to_string(k) +
                                      " does not divide multiplicity " + std::to_string(m0));

  std::vector<Rational> e0(m - k + 1);
  for (int j = 0; j <= m - k; ++j) e0[j] = g0[j + k];

  // Inverse of e(s) mod s^k over Q.
  std::vector<Rational> inv(k, Rational(0));
  inv[0] = e0[0].inverse();
  for (int j = 1; j < k; ++j) {
    Rational acc(0);
    for (int i = 1; i <= j; ++i)
      if (i < static_cast<int>(e0.size())) acc += e0[i] * inv[j - i];
    inv[j] = -(acc * inv[0]);
  }

  // D = s^k + d_{k-1} s^{k-1} + ... + d_0, E starts as e(s); lift one total
  // w-degree at a time.
  std::vector<Poly> dd(k + 1, Poly::zero(w_ring));
  dd[k] = Poly::constant(w_ring, Rational(1));
  std::vector<Poly> ee(m - k + 1, Poly::zero(w_ring));
  for (int j = 0; j <= m - k; ++j) ee[j] = Poly::constant(w_ring, e0[j]);

  for (int deg = 1; deg <= N; ++deg) {
    // Residual R = g - D*E, truncated; its minimal w-degree is `deg`.
    std::vector<Poly> prod(m + 1, Poly::zero(w_ring));
    for (int a = 0; a <= k; ++a) {
      if (dd[a].is_zero()) continue;
      for (int b = 0; b <= m - k; ++b) {
        if (ee[b].is_zero()) continue;
        prod[a + b] += (dd[a] * ee[b]).truncate_above(N);
      }
    }
    std::vector<Poly> slice(m + 1, Poly::zero(w_ring));
    bool empty = true;
    for (int j = 0; j <= m; ++j) {
      Poly r = c[j] - prod[j];
      ExtendedCount o = r.ord();
      if (!o.is_infinite() && o.value() < deg)
        fail(Errc::internal, "Hensel lifting lost a lower-degree residual");
      slice[j] = r.truncate_above(deg) - r.truncate_above(deg - 1);
      if (!slice[j].is_zero()) empty = false;
    }
    if (empty) continue;

    // Solve s^k * E_deg + D_deg * e0 = slice with deg_s D_deg < k:
    // D_deg = slice * inv(e0) mod s^k.
    std::vector<Poly> d_fix(k, Poly::zero(w_ring));
    for (int j = 0; j < k; ++j)
      for (int i = 0; i <= j; ++i)
        if (i <= m && !slice[i].is_zero()) d_fix[j] += slice[i].scaled(inv[j - i]);

    std::vector<Poly> rem(m + 1, Poly::zero(w_ring));
    for (int j = 0; j <= m; ++j) rem[j] = slice[j];
    for (int a = 0; a < k; ++a) {
      if (d_fix[a].is_zero()) continue;
      for (int b = 0; b <= m - k; ++b)
        if (!e0[b].is_zero()) rem[a + b] -= d_fix[a].scaled(e0[b]);
    }
    for (int j = 0; j < k; ++j)
      if (!rem[j].is_zero()) fail(Errc::internal, "Hensel correction failed to cancel");

    for (int j = 0; j < k; ++j) dd[j] += d_fix[j];
    for (int j = 0; j <= m - k; ++j) ee[j] += rem[j + k];
  }

  DistinguishedFactor out;
  out.degree = k;
  out.truncation = N;
  out.w_ring = w_ring;
  out.coeffs.reserve(k);
  for (int i = 1; i <= k; ++i) out.coeffs.push_back(dd[k - i]);  // a_i
  return out;
}

CharPoly CharPoly::make(RingPtr w_ring, RingPtr ws_ring, long m0, std::vector<Poly> q_coeffs,
                        bool exact, int truncation) {
  CharPoly cp;
  cp.w_ring_ = std::move(w_ring);
  cp.ws_ring_ = std::move(ws_ring);
  cp.m0_ = m0;
  cp.min_deg_ = static_cast<int>(q_coeffs.size());
  if (cp.min_deg_ < 1 || m0 % cp.min_deg_ != 0)
    fail(Errc::validation_failed, "minimal degree must divide the multiplicity");
  cp.r_ = static_cast<int>(m0 / cp.min_deg_);
  cp.exact_ = exact;
  cp.truncation_ = truncation;
  for (const auto& a : q_coeffs)
    if (!a.constant_term().is_zero())
      fail(Errc::internal, "characteristic polynomial is not distinguished");
  cp.coeffs_ = std::move(q_coeffs);
  return cp;
}

Poly CharPoly::q_as_poly() const {
  std::vector<Poly> c(coeffs_.rbegin(), coeffs_.rend());  // s^0 coeff = a_m ... s^{m-1} = a_1
  c.push_back(Poly::constant(w_ring_, Rational(1)));
  return join_by_s(c, ws_ring_);
}

Poly CharPoly::p_as_poly() const {
  if (!exact_) fail(Errc::internal, "cannot expand a truncated characteristic polynomial");
  return q_as_poly().pow(static_cast<unsigned>(r_));
}

std::vector<Poly> CharPoly::p_coefficients() const {
  std::vector<Poly> c = split_by_s(p_as_poly(), w_ring_);
  std::vector<Poly> out;  // b_1..b_m, b_i = coeff of s^{m-i}
  for (long i = 1; i <= m0_; ++i) out.push_back(c[m0_ - i]);
  return out;
}

std::optional<CharPoly::MinRatio> CharPoly::certified_min_ratio() const {
  std::optional<MinRatio> best;
  for (int i = 1; i <= min_deg_; ++i) {
    const Poly& a = coeffs_[i - 1];
    if (a.is_zero()) continue;
    long o = a.ord().value();
    Rational ratio(o, i);
    if (!best || ratio < best->value) best = MinRatio{ratio, i, o};
  }
  if (!best) return std::nullopt;
  if (!exact_) {
    // Hidden terms start above the truncation; they cannot beat a candidate
    // of value <= N/m. The last coefficient must also be visible or the
    // Newton polygon's horizontal extent would be unknown.
    if (best->value > Rational(truncation_, min_deg_)) return std::nullopt;
    if (coeffs_.back().is_zero()) return std::nullopt;
  }
  return best;
}

void require_clean_fiber(const Germ& f, const Poly& h) {
  const int n = f.dim();
  const RingPtr& zr = f.ring();

  for (int j = 0; j < n; ++j) {
    // Permuted ring with z_j last; eliminate the leading block.
    std::vector<std::string> names;
    std::vector<int> vmap(n);
    int pos = 0;
    for (int v = 0; v < n; ++v)
      if (v != j) {
        names.push_back(zr->name(v));
        vmap[v] = pos++;
      }
    names.push_back(zr->name(j));
    vmap[j] = n - 1;
    RingPtr pring = Ring::make(std::move(names));

    std::vector<Poly> gens;
    for (const auto& c : f.components())
      if (!c.is_zero()) gens.push_back(c.map_ring(pring, vmap));
    gens.push_back(h.map_ring(pring, vmap));

    MonomialOrder order = n == 1 ? MonomialOrder::DegRevLex() : MonomialOrder::BlockElimination(n - 1);
    StandardBasis gb = buchberger(IdealBasis(std::move(gens), order));

    const Poly* uni = nullptr;
    for (const auto& e : gb.elements) {
      bool univariate = true;
      for (const auto& t : e.terms())
        for (int v = 0; v + 1 < n; ++v)
          if (t.mono[v]) univariate = false;
      if (univariate && (!uni || e.total_degree() < uni->total_degree())) uni = &e;
    }
    if (!uni)
      fail(Errc::clean_fiber_violation,
           "common zero set of (f, h) is positive-dimensional in " + zr->name(j));
    if (uni->num_terms() != 1 || uni->terms()[0].mono.degree() == 0)
      fail(Errc::clean_fiber_violation, "common zero set of (f, h) meets " + zr->name(j) +
                                            " != 0; univariate eliminant is not a pure power");
  }
}

CharPoly characteristic_polynomial(const Germ& f, const Poly& h) {
  return characteristic_polynomial(f, h, multiplicity(f));
}

CharPoly characteristic_polynomial(const Germ& f, const Poly& h, const MultiplicityReport& mult,
                                   std::optional<int> truncation_override) {
  const long m0 = mult.m0;
  require_clean_fiber(f, h);
  EliminantReport er = eliminant(f, h);
  const int n = f.dim();
  RingPtr w_ring = make_w_ring(n);
  const RingPtr& ws = er.g.ring();

  if (er.distinguished_fast_path) {
    std::vector<Poly> c = split_by_s(er.g, w_ring);
    const int m = static_cast<int>(c.size()) - 1;
    if (m0 % m != 0)
      fail(Errc::validation_failed, "eliminant degree " + std::to_string(m) +
                                        " does not divide multiplicity " + std::to_string(m0));
    Rational lead = c[m].constant_term();
    std::vector<Poly> coeffs;
    for (int i = 1; i <= m; ++i) coeffs.push_back(c[m - i].scaled(lead.inverse()));
    return CharPoly::make(w_ring, ws, m0, std::move(coeffs), /*exact=*/true, 0);
  }

  require_squarefree(er.g);
  int ord_h = static_cast<int>(h.ord().value());
  int N = truncation_override.value_or(static_cast<int>(std::max(1, ord_h) * m0));
  for (int attempt = 0; attempt < 8; ++attempt) {
    DistinguishedFactor d = weierstrass_distinguished_factor(er.g, m0, ord_h, N);
    CharPoly cp = CharPoly::make(w_ring, ws, m0, d.coeffs, /*exact=*/false, d.truncation);
    if (cp.certified_min_ratio()) return cp;
    N *= 2;
  }
  fail(Errc::internal, "truncation did not certify after re-lifting");
}

}  // namespace germlab
