// Independent real-root counting oracle: Descartes-bound bisection with exact
// rational arithmetic.  Kept free of any Sturm machinery on purpose; the
// library's counts are checked against this.
#pragma once

#include <utility>
#include <vector>

#include "ordalib/ints.hpp"
#include "ordalib/poly.hpp"

namespace ordalib::testing {

// Sign changes of p((a + (b-a) x)/(1 + x)) mapped to (0, inf) coefficients:
// the classical Vincent-Collins-Akritas test on the interval (a, b).
inline int descartes_on_interval(const IntPolynomial& p, const Rat& a, const Rat& b) {
  const int n = p.degree();
  // q(x) = (1+x)^n p((a + b x) / (1 + x)); count sign changes of q.
  std::vector<Rat> q(static_cast<std::size_t>(n) + 1, Rat(0));
  // Expand sum_k c_k (a + b x)^k (1 + x)^{n-k}.
  for (int k = 0; k <= n; ++k) {
    Rat ck(p.coeff(k));
    if (ck == 0) continue;
    // (a + b x)^k coefficients.
    std::vector<Rat> abk(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
      Rat c = Rat(binomial(Int(k), i));
      for (int t = 0; t < i; ++t) c *= b;
      for (int t = 0; t < k - i; ++t) c *= a;
      abk[static_cast<std::size_t>(i)] = c;
    }
    for (int i = 0; i <= k; ++i) {
      if (abk[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j <= n - k; ++j) {
        q[static_cast<std::size_t>(i + j)] +=
            ck * abk[static_cast<std::size_t>(i)] * Rat(binomial(Int(n - k), j));
      }
    }
  }
  int changes = 0;
  int prev = 0;
  for (const auto& c : q) {
    int s = sign_of(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

// Distinct roots of squarefree p in the open interval (a, b), by bisection;
// roots at the endpoints themselves are not counted.
inline int bisect_count(const IntPolynomial& p, const Rat& a, const Rat& b) {
  int d = descartes_on_interval(p, a, b);
  if (d == 0) return 0;
  if (d == 1) return 1;
  Rat mid = (a + b) / 2;
  int at_mid = p.eval(mid) == 0 ? 1 : 0;
  return bisect_count(p, a, mid) + at_mid + bisect_count(p, mid, b);
}

// Exact (with multiplicity, distinct) counts on (0, inf), fully independent
// of the library implementation: own gcd chain, own isolation.
inline std::pair<int, int> bisect_positive_real_roots(IntPolynomial p) {
  // Strip roots at zero.
  std::vector<Int> cs = p.coeffs();
  std::size_t low = 0;
  while (low < cs.size() && cs[low] == 0) ++low;
  p = IntPolynomial(std::vector<Int>(cs.begin() + static_cast<long>(low), cs.end()));
  if (p.degree() <= 0) return {0, 0};

  Int lead = p.coeffs().back();
  if (lead < 0) lead = -lead;
  Int maxc = 0;
  for (const auto& c : p.coeffs()) {
    Int x = c < 0 ? Int(-c) : c;
    if (x > maxc) maxc = x;
  }
  Rat bound = Rat(maxc, lead) + 2;

  int with_mult = 0;
  int distinct = -1;
  IntPolynomial cur = p;
  while (cur.degree() >= 1) {
    IntPolynomial g = IntPolynomial::gcd(cur, cur.derivative());
    IntPolynomial sqfree = cur.divide_exact(g);
    int n = bisect_count(sqfree, Rat(0), bound);
    if (p.eval(bound) == 0) ++n;  // unreachable with the +2 margin; belt and braces
    if (distinct < 0) distinct = n;
    with_mult += n;
    cur = g;
  }
  return {with_mult, distinct < 0 ? 0 : distinct};
}

}  // namespace ordalib::testing
