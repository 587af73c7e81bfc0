#include "germlab/monomial.hpp"

namespace germlab {

namespace {

int cmp_lex(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

int block_degree(const Monomial& m, int lo, int hi) {
  int d = 0;
  for (int i = lo; i < hi; ++i) d += m[i];
  return d;
}

// Graded reverse lexicographic on the variable slice [lo, hi).
int cmp_degrevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = block_degree(a, lo, hi), db = block_degree(b, lo, hi);
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: the one whose last differing exponent is smaller is larger.
  for (int i = hi - 1; i >= lo; --i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace

int mono_compare(const MonomialOrder& order, const Monomial& m1, const Monomial& m2) {
  if (m1.size() != m2.size()) fail(Errc::invalid_input, "monomial length mismatch");
  const int n = m1.size();
  switch (order.kind) {
    case OrderKind::lex:
      return cmp_lex(m1, m2, 0, n);
    case OrderKind::degrevlex:
      return cmp_degrevlex(m1, m2, 0, n);
    case OrderKind::block_elimination: {
      if (order.block <= 0 || order.block > n)
        fail(Errc::invalid_input, "block size out of range");
      if (int r = cmp_degrevlex(m1, m2, 0, order.block)) return r;
      return cmp_degrevlex(m1, m2, order.block, n);
    }
    case OrderKind::local_antigraded: {
      // Local: 1 is the largest monomial, lower total degree is larger.
      int d1 = m1.degree(), d2 = m2.degree();
      if (d1 != d2) return d1 < d2 ? 1 : -1;
      for (int i = n - 1; i >= 0; --i)
        if (m1[i] != m2[i]) return m1[i] < m2[i] ? 1 : -1;
      return 0;
    }
  }
  fail(Errc::internal, "unreachable order kind");
}

}  // namespace germlab
