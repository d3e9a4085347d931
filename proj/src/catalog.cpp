#include <sstream>

#include "ordalib/presentation.hpp"

namespace ordalib {

namespace {

Presentation make(const std::string& gens, const std::vector<std::string>& rels) {
  std::ostringstream os;
  os << "gens: " << gens << " ; rels: ";
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (i) os << " , ";
    os << rels[i];
  }
  return Presentation::parse(os.str());
}

}  // namespace

Presentation presentation_klein_xy() { return make("x y", {"x*y*x^-1*y"}); }
Presentation presentation_klein_ab() { return make("a b", {"a^2*b^-2"}); }
Presentation presentation_trefoil() { return make("x y", {"x*y*x*y^-1*x^-1*y^-1"}); }

Presentation presentation_torus_knot(int p, int q) {
  std::ostringstream r;
  r << "a^" << p << "*b^" << -q;
  return make("a b", {r.str()});
}

Presentation presentation_crystallographic() {
  return make("a b", {"a^2*b*a^2*b^-1", "b^2*a*b^2*a^-1"});
}

Presentation presentation_weeks() {
  // babab = a b^-2 a  and  ababa = b a^-2 b.
  return make("a b", {"b*a*b*a*b*a^-1*b^2*a^-1", "a*b*a*b*a*b^-1*a^2*b^-1"});
}

Presentation presentation_sigma237() { return make("a b", {"a*b*a*b*b^-3", "b^3*a^-7"}); }
Presentation presentation_poincare() { return make("a b", {"a*b*a*b*b^-3", "b^3*a^-5"}); }

Presentation presentation_gphi(int p, int q, int r, int s) {
  auto power_pair = [](int e2, int emix) {
    // (a2^2)^{e2} (a2 b2)^{emix} spelled out.
    std::ostringstream os;
    for (int i = 0; i < std::abs(e2); ++i) os << (e2 > 0 ? "a2^2*" : "a2^-2*");
    for (int i = 0; i < std::abs(emix); ++i) os << (emix > 0 ? "a2*b2*" : "b2^-1*a2^-1*");
    std::string out = os.str();
    if (!out.empty()) out.pop_back();
    return out;
  };
  auto inv = [](const std::string& prod) {
    // Inverse of a *-separated token word.
    std::vector<std::string> toks;
    std::string cur;
    for (char c : prod + "*") {
      if (c == '*') {
        if (!cur.empty()) toks.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    std::ostringstream os;
    for (auto it = toks.rbegin(); it != toks.rend(); ++it) {
      std::string t = *it;
      auto caret = t.find('^');
      if (caret == std::string::npos) {
        os << t << "^-1*";
      } else {
        long long e = std::stoll(t.substr(caret + 1));
        os << t.substr(0, caret) << '^' << -e << '*';
      }
    }
    std::string out = os.str();
    if (!out.empty()) out.pop_back();
    return out;
  };

  std::vector<std::string> rels;
  rels.push_back("a1^2*b1^-2");
  rels.push_back("a2^2*b2^-2");
  std::string w1 = power_pair(p, q);
  std::string w2 = power_pair(r, s);
  rels.push_back(w1.empty() ? "a1^2" : "a1^2*" + inv(w1));
  rels.push_back(w2.empty() ? "a1*b1" : "a1*b1*" + inv(w2));
  return make("a1 b1 a2 b2", rels);
}

Presentation presentation_sigma_n_41(int n) {
  if (n < 2) fail(Err::OutOfRange, "branched cover index must be >= 2");
  const int m = 2 * n;
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  std::ostringstream gens;
  for (int i = 0; i < m; ++i) gens << (i ? " " : "") << names[static_cast<std::size_t>(i)];

  auto idx = [&](int i) {  // 1-based modulo 2n
    int j = ((i - 1) % m + m) % m;
    return names[static_cast<std::size_t>(j)];
  };
  std::vector<std::string> rels;
  for (int i = 1; i <= m; ++i) {
    // x_i = x_{i-1}^{-1} x_{i+1}
    rels.push_back(idx(i) + "^-1*" + idx(i - 1) + "^-1*" + idx(i + 1));
  }
  std::ostringstream even;
  for (int i = 2; i <= m; i += 2) even << (i > 2 ? "*" : "") << idx(i);
  rels.push_back(even.str());
  return make(gens.str(), rels);
}

Presentation presentation_braid(int n) {
  std::vector<std::string> names;
  for (int i = 1; i < n; ++i) names.push_back("s" + std::to_string(i));
  std::ostringstream gens;
  for (std::size_t i = 0; i < names.size(); ++i) gens << (i ? " " : "") << names[i];
  std::vector<std::string> rels;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::string si = names[static_cast<std::size_t>(i - 1)];
      const std::string sj = names[static_cast<std::size_t>(j - 1)];
      if (j == i + 1) {
        rels.push_back(si + "*" + sj + "*" + si + "*" + sj + "^-1*" + si + "^-1*" + sj + "^-1");
      } else {
        rels.push_back(si + "*" + sj + "*" + si + "^-1*" + sj + "^-1");
      }
    }
  return make(gens.str(), rels);
}

namespace {

AbelianInvariants abelian(int rank, std::vector<long long> torsion) {
  AbelianInvariants a;
  a.free_rank = rank;
  for (long long t : torsion) a.torsion.emplace_back(t);
  return a;
}

std::vector<RefutationHint> weeks_hints(const Presentation& weeks) {
  const auto alpha = weeks.alphabet();
  auto W = [&](const std::string& s) { return Word::parse(s, alpha); };
  // X = {a, b, a^-1 b}; witnesses realize the sign contradictions of the
  // non-left-orderability argument, certified against the two relators.
  std::vector<RefutationHint> hints;

  RewriteCertificate cert_ppp = {{W("b^-1"), 0, +1}};
  RewriteCertificate cert_ppm = {{W("a^-1"), 1, +1}};
  RewriteCertificate cert_pm = {{W("a^-1*b^-1*a^-1*b^-1*a^-1"), 1, +1},
                                {W("a^-1*b^-1*a^-1*b^-1"), 0, -1}};
  RewriteCertificate cert_mp = {{W("b^-1*a^-1*b^-1*a^-1*b^-1"), 0, +1},
                                {W("b^-1*a^-1*b^-1*a^-1"), 1, -1}};
  RewriteCertificate cert_mmm = {{W("b^-1"), 0, -1}};
  RewriteCertificate cert_mmp = {{W("a^-1"), 1, -1}};

  hints.push_back({{+1, +1, +1}, {0, 1, 0, 1, 2, 1, 2}, cert_ppp});
  hints.push_back({{+1, +1, -1}, {1, 0, 1, 0, 2, 0, 2}, cert_ppm});
  hints.push_back({{+1, -1, +1}, {1, 0, 0, 1, 0, 0, 1, 1, 0, 1}, cert_pm});
  hints.push_back({{+1, -1, -1}, {1, 0, 0, 1, 0, 0, 1, 1, 0, 1}, cert_pm});
  hints.push_back({{-1, +1, +1}, {0, 1, 1, 0, 1, 1, 0, 0, 1, 0}, cert_mp});
  hints.push_back({{-1, +1, -1}, {0, 1, 1, 0, 1, 1, 0, 0, 1, 0}, cert_mp});
  hints.push_back({{-1, -1, -1}, {2, 1, 2, 1, 0, 1, 0}, cert_mmm});
  hints.push_back({{-1, -1, +1}, {2, 0, 2, 0, 1, 0, 1}, cert_mmp});
  return hints;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  {
    CatalogEntry e;
    e.name = "kleinbottle";
    e.presentation = presentation_klein_xy();
    e.oracle_hint = OracleKind::KleinBottle;
    e.expected.lo_count = 4;
    e.expected.left_orderable = true;
    e.expected.abelianization = abelian(1, {2});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "kleinbottle_ab";
    e.presentation = presentation_klein_ab();
    e.oracle_hint = OracleKind::BoundedRewriting;
    e.expected.lo_count = 4;
    e.expected.left_orderable = true;
    e.expected.abelianization = abelian(1, {2});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "trefoil";
    e.presentation = presentation_trefoil();
    e.oracle_hint = OracleKind::BoundedRewriting;
    e.expected.abelianization = abelian(1, {});
    e.expected.left_orderable = true;
    out.push_back(std::move(e));
  }
  for (auto [p, q] : {std::pair<int, int>{2, 3}, {2, 5}, {3, 5}, {4, 3}}) {
    CatalogEntry e;
    e.name = "torus_" + std::to_string(p) + "_" + std::to_string(q);
    e.presentation = presentation_torus_knot(p, q);
    e.expected.abelianization = abelian(1, {});
    e.expected.left_orderable = true;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "crystallographic";
    e.presentation = presentation_crystallographic();
    e.oracle_hint = OracleKind::AffineCrystallographic;
    e.expected.left_orderable = false;
    e.expected.abelianization = abelian(0, {4, 4});
    e.sign_test_words = {Word::parse("a", e.presentation.alphabet()),
                         Word::parse("b", e.presentation.alphabet())};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "weeks";
    e.presentation = presentation_weeks();
    e.oracle_hint = OracleKind::BoundedRewriting;
    e.expected.left_orderable = false;
    e.expected.abelianization = abelian(0, {5, 5});
    const auto alpha = e.presentation.alphabet();
    e.sign_test_words = {Word::parse("a", alpha), Word::parse("b", alpha),
                         Word::parse("a^-1*b", alpha)};
    e.hints = weeks_hints(e.presentation);
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "sigma237";
    e.presentation = presentation_sigma237();
    e.expected.abelianization = abelian(0, {});
    e.expected.left_orderable = true;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "poincare";
    e.presentation = presentation_poincare();
    e.expected.abelianization = abelian(0, {});
    e.expected.order = 120;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "gphi_1_0_m1_0";
    e.presentation = presentation_gphi(1, 0, -1, 0);
    e.expected.left_orderable = false;
    out.push_back(std::move(e));
  }
  for (int n = 2; n <= 5; ++n) {
    CatalogEntry e;
    e.name = "sigma_" + std::to_string(n) + "_41";
    e.presentation = presentation_sigma_n_41(n);
    e.expected.complete = true;
    e.expected.left_orderable = false;
    out.push_back(std::move(e));
  }
  for (int n : {3, 4}) {
    CatalogEntry e;
    e.name = "braid_" + std::to_string(n);
    e.presentation = presentation_braid(n);
    e.oracle_hint = OracleKind::Braid;
    e.expected.left_orderable = true;
    e.expected.abelianization = abelian(1, {});
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_lookup(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  fail(Err::UnknownGenerator, "no catalog entry named " + name);
}

}  // namespace ordalib
