#include "ordalib/knot.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ordalib/error.hpp"

namespace ordalib {

IntPolynomial torus_alexander(int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) fail(Err::NotCoprime, "torus knot needs coprime p, q >= 2");
  auto cyclo_like = [](int n) {  // t^n - 1
    std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int(0));
    c[0] = -1;
    c[static_cast<std::size_t>(n)] = 1;
    return IntPolynomial(std::move(c));
  };
  IntPolynomial num = cyclo_like(p * q) * cyclo_like(1);
  IntPolynomial den = cyclo_like(p) * cyclo_like(q);
  return num.divide_exact(den);
}

bool alexander_sanity(const IntPolynomial& p) {
  if (p.is_zero()) return false;
  Int at_one = p.eval(Int(1));
  if (at_one != 1 && at_one != -1) return false;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != c[c.size() - 1 - i]) return false;
  return true;
}

void KnotInput::validate() const {
  if (!braid && !polynomial) fail(Err::MissingParameters, name + ": no braid or polynomial source");
  if (two_bridge) {
    auto [p, q] = *two_bridge;
    if (!(0 < p && p < q) || p % 2 == 0 || q % 2 == 0 || std::gcd(p, q) != 1)
      fail(Err::BadParameters, name + ": two-bridge pair must be coprime odd with 0 < p < q");
  }
}

IntPolynomial KnotInput::resolve_polynomial() const {
  if (polynomial) return *polynomial;
  if (braid) return alexander_from_braid(*braid);
  fail(Err::MissingParameters, name + ": no polynomial source");
}

std::string Verdict::str() const {
  switch (value) {
    case BiOrderable:
      return "bi-orderable";
    case NotBiOrderable:
      return "not-bi-orderable";
    case Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

Verdict with_counts(Verdict::Value v, std::string rule, std::pair<int, int> counts) {
  Verdict out;
  out.value = v;
  out.rule = std::move(rule);
  out.roots_with_multiplicity = counts.first;
  out.roots_distinct = counts.second;
  return out;
}

}  // namespace

Verdict verdict_fibred(const KnotInput& k) {
  if (!k.fibred.has_value() || !*k.fibred)
    fail(Err::MissingFibredFlag, k.name + ": fibred flag required for the fibred criterion");
  IntPolynomial delta = k.resolve_polynomial();
  if (delta.degree() <= 0) {
    // Delta = 1: trivial knot group is Z.
    return with_counts(Verdict::BiOrderable, "trivial-alexander", {0, 0});
  }
  auto counts = positive_real_roots(delta);
  if (counts.first == delta.degree())
    return with_counts(Verdict::BiOrderable, "all-roots-real-positive", counts);
  if (counts.first == 0)
    return with_counts(Verdict::NotBiOrderable, "no-positive-real-roots", counts);
  return with_counts(Verdict::Inconclusive, "mixed-roots", counts);
}

Verdict verdict_two_bridge(const KnotInput& k) {
  if (!k.two_bridge) fail(Err::MissingParameters, k.name + ": two-bridge parameters required");
  k.validate();
  IntPolynomial delta = k.resolve_polynomial();
  if (delta.degree() <= 0) return with_counts(Verdict::Inconclusive, "trivial-alexander", {0, 0});
  auto counts = positive_real_roots(delta);
  if (counts.first == 0)
    return with_counts(Verdict::NotBiOrderable, "two-bridge-no-positive-roots", counts);
  return with_counts(Verdict::Inconclusive, "two-bridge-positive-roots-present", counts);
}

Verdict verdict_twist(int m) {
  if (m <= 1) fail(Err::OutOfRange, "twist knots need m > 1");
  Verdict out;
  out.value = m % 2 == 0 ? Verdict::BiOrderable : Verdict::NotBiOrderable;
  out.rule = m % 2 == 0 ? "twist-parity-even" : "twist-parity-odd";
  return out;
}

Verdict verdict_auto(const KnotInput& k) {
  k.validate();
  if (k.twist_m) return verdict_twist(*k.twist_m);
  if (k.fibred.has_value() && *k.fibred) return verdict_fibred(k);
  if (k.two_bridge) return verdict_two_bridge(k);
  Verdict out;
  out.rule = "no-applicable-criterion";
  return out;
}

Presentation two_bridge_presentation(int p, int q) {
  if (!(0 < p && p < q) || p % 2 == 0 || q % 2 == 0 || std::gcd(p, q) != 1)
    fail(Err::BadParameters, "two-bridge pair must be coprime odd with 0 < p < q");
  auto alpha = Alphabet::of_names({"a", "b"});
  Word w = Word::identity(alpha);
  for (int i = 1; i <= q - 1; ++i) {
    int eps = ((static_cast<long long>(i) * p / q) % 2 == 0) ? +1 : -1;
    int gen = (i % 2 == 1) ? 1 : 0;  // w = b^{e1} a^{e2} b^{e3} ... a^{e_{q-1}}
    w = w * Word::generator(alpha, gen, eps);
  }
  Word a = Word::generator(alpha, 0);
  Word b = Word::generator(alpha, 1);
  // a w = w b  =>  relator a w b^{-1} w^{-1}.
  Word relator = a * w * b.inverse() * w.inverse();
  return Presentation(alpha, {relator});
}

Presentation wirtinger(const std::vector<Crossing>& crossings) {
  std::set<std::string> arc_names;
  for (const auto& c : crossings) {
    arc_names.insert(c.over);
    arc_names.insert(c.in);
    arc_names.insert(c.out);
  }
  if (arc_names.empty()) fail(Err::InconsistentDiagram, "no crossings");

  // Each arc leaves exactly one crossing and enters exactly one, and the
  // under-strand arcs form a single cycle (a knot, not a link).
  if (crossings.size() > 1) {
    std::map<std::string, int> in_count, out_count;
    std::map<std::string, std::string> succ;
    for (const auto& c : crossings) {
      ++in_count[c.in];
      ++out_count[c.out];
      succ[c.in] = c.out;
    }
    for (const auto& name : arc_names) {
      if (in_count[name] != 1 || out_count[name] != 1)
        fail(Err::InconsistentDiagram, "arc " + name + " does not appear exactly once as in/out");
    }
    std::string cur = *arc_names.begin();
    std::size_t steps = 0;
    do {
      cur = succ.at(cur);
      ++steps;
    } while (cur != *arc_names.begin() && steps <= arc_names.size());
    if (steps != arc_names.size())
      fail(Err::InconsistentDiagram, "under-strand arcs do not form a single cycle");
  }

  std::vector<std::string> names(arc_names.begin(), arc_names.end());
  auto alpha = Alphabet::of_names(names);
  auto gen = [&](const std::string& n) {
    return Word::generator(alpha, alpha->find_name(n));
  };

  std::vector<Word> rels;
  for (const auto& c : crossings) {
    Word x = gen(c.in), y = gen(c.over), z = gen(c.out);
    // positive: x y = y z;  negative: x y = z x.
    Word relator = c.sign >= 0 ? x * y * z.inverse() * y.inverse()
                               : x * y * x.inverse() * z.inverse();
    if (!relator.empty()) rels.push_back(relator);
  }
  return Presentation(alpha, std::move(rels));
}

}  // namespace ordalib
