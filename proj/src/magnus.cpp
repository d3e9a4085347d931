#include "ordalib/magnus.hpp"

#include <algorithm>
#include <sstream>

namespace ordalib {

TruncatedSeries TruncatedSeries::one(int degree) {
  TruncatedSeries s(degree);
  s.coeffs_[Monomial{}] = 1;
  return s;
}

Int TruncatedSeries::coeff(const Monomial& m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Int(0) : it->second;
}

void TruncatedSeries::add(const Monomial& m, const Int& c) {
  if (c == 0 || m.degree() > degree_) return;
  auto it = coeffs_.find(m);
  if (it == coeffs_.end()) {
    coeffs_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& rhs) const {
  if (degree_ != rhs.degree_) fail(Err::DegreeMismatch, "series truncation degrees differ");
  TruncatedSeries out(degree_);
  for (const auto& [ma, ca] : coeffs_) {
    for (const auto& [mb, cb] : rhs.coeffs_) {
      if (ma.degree() + mb.degree() > degree_) continue;
      Monomial m = ma;
      m.vars.insert(m.vars.end(), mb.vars.begin(), mb.vars.end());
      out.add(m, ca * cb);
    }
  }
  return out;
}

std::optional<std::pair<Monomial, std::pair<Int, Int>>> TruncatedSeries::first_difference(
    const TruncatedSeries& rhs) const {
  auto ia = coeffs_.begin();
  auto ib = rhs.coeffs_.begin();
  while (ia != coeffs_.end() || ib != rhs.coeffs_.end()) {
    if (ib == rhs.coeffs_.end() || (ia != coeffs_.end() && ia->first < ib->first)) {
      return std::make_pair(ia->first, std::make_pair(ia->second, Int(0)));
    }
    if (ia == coeffs_.end() || ib->first < ia->first) {
      return std::make_pair(ib->first, std::make_pair(Int(0), ib->second));
    }
    if (ia->second != ib->second)
      return std::make_pair(ia->first, std::make_pair(ia->second, ib->second));
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

std::string TruncatedSeries::str(const AlphabetPtr& alpha) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : coeffs_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << '-';
    first = false;
    Int a = c > 0 ? c : Int(-c);
    bool unit = a == 1 && m.degree() > 0;
    if (!unit) os << a.str();
    for (std::size_t i = 0; i < m.vars.size(); ++i) {
      if (!unit || i > 0) os << '.';
      os << 'X' << '(' << alpha->gen(m.vars[i]).str() << ')';
    }
  }
  return os.str();
}

namespace {

// (1 + X_g)^e truncated at degree d; exact for negative e via C(e, k).
TruncatedSeries syllable_series(int gen, std::int64_t exp, int d) {
  TruncatedSeries s(d);
  for (int k = 0; k <= d; ++k) {
    Monomial m;
    m.vars.assign(static_cast<std::size_t>(k), gen);
    s.add(m, binomial(Int(exp), k));
  }
  return s;
}

}  // namespace

TruncatedSeries magnus_expand(const Word& w, int d) {
  if (d < 1) fail(Err::OutOfRange, "truncation degree must be >= 1");
  TruncatedSeries out = TruncatedSeries::one(d);
  for (const auto& s : w.syllables()) out = out.mul(syllable_series(s.gen, s.exp, d));
  return out;
}

std::optional<std::pair<Monomial, Int>> magnus_leading_term(const Word& w) {
  if (w.empty()) return std::nullopt;
  // The lowest nonconstant term of mu(w) has degree at most the syllable
  // count, so escalate the truncation degree until it shows up.
  for (int d = 1; d <= w.syllable_count(); ++d) {
    TruncatedSeries s = magnus_expand(w, d);
    auto diff = s.first_difference(TruncatedSeries::one(d));
    if (diff) return std::make_pair(diff->first, diff->second.first);
  }
  fail(Err::Internal, "nonempty reduced word with trivial expansion");
}

Cmp magnus_compare(const Word& u, const Word& v) {
  Word r = u.inverse() * v;
  if (r.empty()) return Cmp::Equal;
  auto lead = magnus_leading_term(r);
  // u < v iff mu(u) < mu(v) iff 1 < mu(u^{-1} v), by bi-invariance of the
  // series order; the truncation degree stays below len(u)+len(v)+1.
  return lead->second > 0 ? Cmp::Less : Cmp::Greater;
}

bool is_garside_positive(const Word& w) {
  for (const auto& s : w.syllables())
    if (s.exp < 0) return false;
  return true;
}

}  // namespace ordalib
