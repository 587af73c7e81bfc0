#include "germlab/ideal.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace germlab {

IdealBasis::IdealBasis(std::vector<Poly> gens, MonomialOrder ord) : generators(std::move(gens)), order(ord) {
  if (generators.empty()) fail(Errc::invalid_input, "empty ideal basis");
  const RingPtr& r = generators.front().ring();
  for (const auto& g : generators) {
    if (g.is_zero()) fail(Errc::invalid_input, "zero generator");
    if (!same_ring(g.ring(), r)) fail(Errc::invalid_input, "generators in different rings");
  }
}

namespace {

// Terms sorted strictly descending under the active order.
struct OrderedPoly {
  std::vector<Term> t;
  bool zero() const { return t.empty(); }
  const Term& lead() const { return t.front(); }
  // Valid for degree-compatible orders: under the local antigraded order the
  // last term carries the maximal total degree.
  int ecart() const { return t.back().mono.degree() - t.front().mono.degree(); }
};

OrderedPoly to_ordered(const Poly& p, const MonomialOrder& order) {
  OrderedPoly op;
  op.t.assign(p.terms().begin(), p.terms().end());
  std::sort(op.t.begin(), op.t.end(),
            [&](const Term& a, const Term& b) { return mono_compare(order, a.mono, b.mono) > 0; });
  return op;
}

Poly to_poly(const OrderedPoly& op, const RingPtr& ring) {
  return Poly::from_terms(ring, std::vector<Term>(op.t.begin(), op.t.end()));
}

// a - c*m*b with leading terms of both known to cancel when called from
// reduce_step; general merge otherwise.
OrderedPoly axpy(const OrderedPoly& a, const Rational& c, const Monomial& m, const OrderedPoly& b,
                 const MonomialOrder& order) {
  OrderedPoly out;
  out.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    Monomial bm = b.t[j].mono * m;
    int cmp = mono_compare(order, a.t[i].mono, bm);
    if (cmp > 0) {
      out.t.push_back(a.t[i++]);
    } else if (cmp < 0) {
      Rational coef = -(c * b.t[j].coef);
      out.t.push_back({bm, std::move(coef)});
      ++j;
    } else {
      Rational coef = a.t[i].coef - c * b.t[j].coef;
      if (!coef.is_zero()) out.t.push_back({a.t[i].mono, std::move(coef)});
      ++i, ++j;
    }
  }
  for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) out.t.push_back({b.t[j].mono * m, -(c * b.t[j].coef)});
  return out;
}

// One division step: h := h - (LT(h)/LT(g))*g. Cancels LT(h).
OrderedPoly reduce_step(const OrderedPoly& h, const OrderedPoly& g, const MonomialOrder& order) {
  Rational c = h.lead().coef / g.lead().coef;
  Monomial m = h.lead().mono / g.lead().mono;
  return axpy(h, c, m, g, order);
}

OrderedPoly spoly(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order) {
  Monomial l = Monomial::lcm(f.lead().mono, g.lead().mono);
  Monomial uf = l / f.lead().mono;
  Monomial ug = l / g.lead().mono;
  // lcg*uf*f - lcf*ug*g; the heads cancel.
  OrderedPoly sf;
  sf.t.reserve(f.t.size());
  for (const auto& t : f.t) sf.t.push_back({t.mono * uf, t.coef * g.lead().coef});
  return axpy(sf, f.lead().coef, ug, g, order);
}

OrderedPoly full_normal_form(OrderedPoly h, std::span<const OrderedPoly> basis,
                             const MonomialOrder& order) {
  std::vector<Term> done;
  while (!h.zero()) {
    const OrderedPoly* reducer = nullptr;
    for (const auto& g : basis)
      if (g.lead().mono.divides(h.lead().mono)) {
        reducer = &g;
        break;
      }
    if (reducer) {
      h = reduce_step(h, *reducer, order);
    } else {
      done.push_back(h.lead());
      h.t.erase(h.t.begin());
    }
  }
  h.t = std::move(done);
  return h;
}

// Mora's ecart-bounded reduction. The reducer set grows by intermediate
// results, which is what makes division terminate for local orders.
OrderedPoly mora_weak_normal_form(OrderedPoly h, std::span<const OrderedPoly> basis,
                                  const MonomialOrder& order) {
  std::vector<const OrderedPoly*> reducers;
  reducers.reserve(basis.size());
  for (const auto& g : basis) reducers.push_back(&g);
  std::deque<OrderedPoly> extras;  // stable addresses

  while (!h.zero()) {
    const OrderedPoly* best = nullptr;
    for (const OrderedPoly* g : reducers)
      if (g->lead().mono.divides(h.lead().mono))
        if (!best || g->ecart() < best->ecart()) best = g;
    if (!best) return h;
    if (best->ecart() > h.ecart()) {
      extras.push_back(h);
      reducers.push_back(&extras.back());
    }
    h = reduce_step(h, *best, order);
  }
  return h;
}

struct CriticalPair {
  int i, j;
  Monomial lcm;
  int deg;
};

struct PairCompare {
  const MonomialOrder* order;
  bool operator()(const CriticalPair& a, const CriticalPair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (int c = mono_compare(*order, a.lcm, b.lcm)) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Gebauer-Moller pair update: adds element index t, prunes old and new pairs.
void update_pairs(std::set<CriticalPair, PairCompare>& pairs, const std::vector<OrderedPoly>& g,
                  int t) {
  const Monomial& lt = g[t].lead().mono;

  // Prune old pairs made redundant by the new leading monomial.
  for (auto it = pairs.begin(); it != pairs.end();) {
    Monomial lij = it->lcm;
    if (lt.divides(lij) && Monomial::lcm(g[it->i].lead().mono, lt) != lij &&
        Monomial::lcm(g[it->j].lead().mono, lt) != lij) {
      it = pairs.erase(it);
    } else {
      ++it;
    }
  }

  struct Cand {
    int i;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Cand> cands;
  for (int i = 0; i < t; ++i)
    cands.push_back({i, Monomial::lcm(g[i].lead().mono, lt), g[i].lead().mono.coprime(lt)});

  // Drop candidates whose lcm is a strict multiple of another candidate's lcm.
  std::vector<bool> drop(cands.size(), false);
  for (size_t a = 0; a < cands.size(); ++a)
    for (size_t b = 0; b < cands.size(); ++b) {
      if (a == b || drop[a]) continue;
      if (cands[b].lcm.divides(cands[a].lcm) && cands[b].lcm != cands[a].lcm && !drop[b]) drop[a] = true;
    }

  // Group by equal lcm: a class containing a coprime pair is discarded
  // entirely; otherwise one representative survives.
  std::map<Monomial, std::vector<size_t>> classes;
  for (size_t a = 0; a < cands.size(); ++a)
    if (!drop[a]) classes[cands[a].lcm].push_back(a);
  for (auto& [lcm, members] : classes) {
    bool coprime = std::any_of(members.begin(), members.end(),
                               [&](size_t a) { return cands[a].coprime; });
    if (coprime) continue;
    size_t keep = *std::min_element(members.begin(), members.end(), [&](size_t a, size_t b) {
      return cands[a].i < cands[b].i;
    });
    pairs.insert({cands[keep].i, t, cands[keep].lcm, cands[keep].lcm.degree()});
  }
}

std::vector<OrderedPoly> complete_basis(const IdealBasis& in, bool local) {
  const MonomialOrder& order = in.order;
  std::vector<OrderedPoly> g;
  for (const auto& p : in.generators) {
    Poly q = p.primitive_normalized(order);
    OrderedPoly op = to_ordered(q, order);
    bool dup = std::any_of(g.begin(), g.end(), [&](const OrderedPoly& e) { return e.t.size() == op.t.size() && to_poly(e, in.ring()) == q; });
    if (!dup) g.push_back(std::move(op));
  }

  PairCompare pc{&order};
  std::set<CriticalPair, PairCompare> pairs(pc);
  for (int t = 0; t < static_cast<int>(g.size()); ++t) update_pairs(pairs, g, t);

  auto nf = [&](OrderedPoly s) {
    return local ? mora_weak_normal_form(std::move(s), g, order)
                 : full_normal_form(std::move(s), g, order);
  };

  while (!pairs.empty()) {
    CriticalPair pair = *pairs.begin();
    pairs.erase(pairs.begin());
    OrderedPoly s = spoly(g[pair.i], g[pair.j], order);
    if (s.zero()) continue;
    OrderedPoly r = nf(std::move(s));
    if (r.zero()) continue;
    Poly rp = to_poly(r, in.ring()).primitive_normalized(order);
    g.push_back(to_ordered(rp, order));
    update_pairs(pairs, g, static_cast<int>(g.size()) - 1);
  }
  return g;
}

StandardBasis finalize_basis(const IdealBasis& in, std::vector<OrderedPoly> g, bool tail_reduce) {
  const MonomialOrder& order = in.order;
  const RingPtr& ring = in.ring();

  // Minimalize: keep only elements whose leading monomial is not divisible by
  // another kept one. Processing in ascending leading-monomial order makes
  // the choice deterministic.
  std::sort(g.begin(), g.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return mono_compare(order, a.lead().mono, b.lead().mono) < 0;
  });
  std::vector<OrderedPoly> kept;
  for (auto& e : g) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const OrderedPoly& k) {
      return k.lead().mono.divides(e.lead().mono);
    });
    if (!redundant) kept.push_back(std::move(e));
  }

  if (tail_reduce) {
    for (size_t i = 0; i < kept.size(); ++i) {
      std::vector<OrderedPoly> others;
      for (size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      OrderedPoly r = full_normal_form(kept[i], others, order);
      kept[i] = to_ordered(to_poly(r, ring).primitive_normalized(order), order);
    }
  }

  StandardBasis sb;
  sb.order = order;
  sb.ring = ring;
  for (auto& e : kept) {
    Poly p = to_poly(e, ring).primitive_normalized(order);
    sb.leading_monomials.push_back(p.leading_term(order).mono);
    sb.elements.push_back(std::move(p));
  }
  return sb;
}

}  // namespace

StandardBasis buchberger(const IdealBasis& basis) {
  if (!basis.order.is_global()) fail(Errc::invalid_input, "buchberger requires a global order");
  return finalize_basis(basis, complete_basis(basis, /*local=*/false), /*tail_reduce=*/true);
}

StandardBasis standard_basis(const IdealBasis& basis) {
  if (!basis.order.is_local()) fail(Errc::invalid_input, "standard_basis requires the local order");
  return finalize_basis(basis, complete_basis(basis, /*local=*/true), /*tail_reduce=*/false);
}

Poly normal_form(const Poly& p, std::span<const Poly> basis, const MonomialOrder& order) {
  if (!order.is_global()) fail(Errc::invalid_input, "normal_form requires a global order");
  std::vector<OrderedPoly> b;
  for (const auto& q : basis) {
    if (q.is_zero()) fail(Errc::invalid_input, "zero element in basis");
    b.push_back(to_ordered(q, order));
  }
  return to_poly(full_normal_form(to_ordered(p, order), b, order), p.ring());
}

Poly mora_normal_form(const Poly& p, std::span<const Poly> basis, const MonomialOrder& order) {
  if (!order.is_local()) fail(Errc::invalid_input, "mora_normal_form requires the local order");
  std::vector<OrderedPoly> b;
  for (const auto& q : basis) {
    if (q.is_zero()) fail(Errc::invalid_input, "zero element in basis");
    b.push_back(to_ordered(q, order));
  }
  return to_poly(mora_weak_normal_form(to_ordered(p, order), b, order), p.ring());
}

ExtendedCount staircase_dimension(const StandardBasis& sb) {
  const int n = sb.ring->nvars();
  if (sb.leading_monomials.empty()) fail(Errc::invalid_input, "empty standard basis");

  // A unit leading monomial means the whole ring.
  for (const auto& m : sb.leading_monomials)
    if (m.is_one()) return ExtendedCount(0);

  // Finiteness: every variable needs a pure power among the minimal leading
  // monomials; that power bounds the staircase box.
  std::vector<unsigned> bound(n, 0);
  for (const auto& m : sb.leading_monomials) {
    int support = -1;
    bool pure = true;
    for (int v = 0; v < n; ++v)
      if (m[v]) {
        if (support >= 0) {
          pure = false;
          break;
        }
        support = v;
      }
    if (pure && support >= 0)
      if (bound[support] == 0 || m[support] < bound[support]) bound[support] = m[support];
  }
  for (int v = 0; v < n; ++v)
    if (bound[v] == 0) return ExtendedCount::infinity();

  long box = 1;
  for (int v = 0; v < n; ++v) {
    box *= bound[v];
    if (box > 20'000'000L) fail(Errc::internal, "staircase box too large to enumerate");
  }

  // Enumerate the box and count monomials below the staircase.
  long count = 0;
  Monomial m(n);
  std::vector<unsigned> exp(n, 0);
  while (true) {
    for (int v = 0; v < n; ++v) m.set(v, exp[v]);
    bool inside = std::none_of(sb.leading_monomials.begin(), sb.leading_monomials.end(),
                               [&](const Monomial& lm) { return lm.divides(m); });
    if (inside) ++count;
    int v = 0;
    while (v < n) {
      if (++exp[v] < bound[v]) break;
      exp[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return ExtendedCount(count);
}

}  // namespace germlab
