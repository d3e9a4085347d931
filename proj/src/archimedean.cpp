#include "ordalib/archimedean.hpp"

#include <sstream>

#include "ordalib/error.hpp"

namespace ordalib {

Quad Quad::operator+(const Quad& o) const {
  if (d != o.d) fail(Err::DimensionMismatch, "mixed quadratic fields");
  return Quad(a + o.a, b + o.b, d);
}

Quad Quad::operator-(const Quad& o) const {
  if (d != o.d) fail(Err::DimensionMismatch, "mixed quadratic fields");
  return Quad(a - o.a, b - o.b, d);
}

Quad Quad::operator*(const Quad& o) const {
  if (d != o.d) fail(Err::DimensionMismatch, "mixed quadratic fields");
  return Quad(a * o.a + Int(d) * b * o.b, a * o.b + b * o.a, d);
}

int Quad::sign() const {
  int sa = sign_of(a);
  int sb = sign_of(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against d b^2.
  Int lhs = a * a;
  Int rhs = Int(d) * b * b;
  if (lhs == rhs) fail(Err::OutOfRange, "sqrt(d) must be irrational (d squarefree > 1)");
  // |a| > |b| sqrt(d) iff a^2 > d b^2; then the sign follows a, else b.
  return lhs > rhs ? sa : sb;
}

std::string Quad::str() const {
  std::ostringstream os;
  if (b == 0) {
    os << a.str();
  } else {
    if (a != 0) os << a.str() << (b > 0 ? "+" : "");
    if (b == 1) {
      os << "sqrt" << d;
    } else if (b == -1) {
      os << "-sqrt" << d;
    } else {
      os << b.str() << "*sqrt" << d;
    }
  }
  return os.str();
}

namespace {

Quad parse_component(const std::string& text) {
  // Accepts: INT | [INT*]sqrtD | INT+[INT*]sqrtD | INT-[INT*]sqrtD
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) fail(Err::ParseError, "empty vector component");

  auto parse_term = [](const std::string& term, Int& a, Int& b, long long& d) {
    auto pos = term.find("sqrt");
    if (pos == std::string::npos) {
      a += Int(term);
      return;
    }
    std::string coeff = term.substr(0, pos);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    Int c = coeff.empty() || coeff == "+" ? Int(1) : (coeff == "-" ? Int(-1) : Int(coeff));
    std::string ds = term.substr(pos + 4);
    if (ds.empty()) fail(Err::ParseError, "sqrt needs a radicand: " + term);
    d = std::stoll(ds);
    b += c;
  };

  Int a = 0, b = 0;
  long long d = 0;
  // Split into signed terms.
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if ((c == '+' || c == '-') && i > 0 && s[i - 1] != '*' && s[i - 1] != '+' && s[i - 1] != '-') {
      terms.push_back(cur);
      cur.clear();
      if (c == '-') cur.push_back('-');
    } else {
      cur.push_back(c);
    }
  }
  terms.push_back(cur);
  for (const auto& t : terms) {
    try {
      parse_term(t, a, b, d);
    } catch (const std::exception&) {
      fail(Err::ParseError, "malformed vector component: " + text);
    }
  }
  if (d == 0) d = 2;  // no sqrt term: field irrelevant
  if (d < 2) fail(Err::ParseError, "radicand must be >= 2");
  return Quad(a, b, d);
}

std::vector<Quad> parse_vector(const std::string& text) {
  std::vector<Quad> out;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) out.push_back(parse_component(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  if (out.empty()) fail(Err::ParseError, "empty vector");
  long long d = 2;
  for (const auto& q : out)
    if (q.b != 0) d = q.d;
  for (auto& q : out) q.d = d;
  return out;
}

}  // namespace

OrderVector OrderVector::parse(const std::string& text, const std::string& tiebreak_text) {
  OrderVector v;
  v.primary = parse_vector(text);
  if (!tiebreak_text.empty()) {
    auto tb = parse_vector(tiebreak_text);
    if (tb.size() != v.primary.size()) fail(Err::DimensionMismatch, "tiebreak dimension mismatch");
    v.tiebreaks.push_back(std::move(tb));
  }
  return v;
}

namespace {

int dot_sign(const std::vector<Quad>& vec, const ZVec& m) {
  if (vec.size() != m.size()) fail(Err::DimensionMismatch, "vector dimension mismatch");
  Quad acc = Quad::integer(0, vec.front().d);
  for (std::size_t i = 0; i < vec.size(); ++i) acc = acc + vec[i].scaled(Int(m[i]));
  return acc.sign();
}

ZVec sub(const ZVec& a, const ZVec& b) {
  ZVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

ZVec scale(const ZVec& a, std::int64_t k) {
  ZVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * k;
  return out;
}

}  // namespace

Cmp zn_compare(const OrderVector& v, const ZVec& m, const ZVec& n) {
  if (m.size() != n.size() || static_cast<int>(m.size()) != v.dimension())
    fail(Err::DimensionMismatch, "vector dimension mismatch");
  ZVec diff = sub(n, m);
  int s = dot_sign(v.primary, diff);
  if (s > 0) return Cmp::Less;
  if (s < 0) return Cmp::Greater;
  for (const auto& tb : v.tiebreaks) {
    s = dot_sign(tb, diff);
    if (s > 0) return Cmp::Less;
    if (s < 0) return Cmp::Greater;
  }
  return Cmp::Equal;
}

Rat holder_phi(const OrderVector& v, const ZVec& f, const ZVec& g, int K) {
  ZVec zero(f.size(), 0);
  Cmp fs = zn_compare(v, zero, f);
  if (fs == Cmp::Equal) fail(Err::OutOfRange, "f must be nonzero");
  if (fs == Cmp::Greater) {
    // f negative: phi_{f^{-1}}(g) = -phi_f(g).
    ZVec neg = scale(f, -1);
    return -holder_phi(v, neg, g, K);
  }

  const std::int64_t cap = std::int64_t(1) << 40;
  auto leq = [&](const ZVec& x, const ZVec& y) { return zn_compare(v, x, y) != Cmp::Greater; };

  // a(m) = max { a : a f <= m g }, by doubling then bisection.
  auto bracket = [&](std::int64_t m) -> std::int64_t {
    ZVec mg = scale(g, m);
    auto le = [&](std::int64_t a) { return leq(scale(f, a), mg); };
    std::int64_t lo, hi;
    if (le(0)) {
      lo = 0;
      hi = 1;
      while (le(hi)) {
        lo = hi;
        hi *= 2;
        if (hi > cap) fail(Err::NotArchimedean, "multiple search diverged; ordering not Archimedean?");
      }
    } else {
      hi = 0;
      lo = -1;
      while (!le(lo)) {
        hi = lo;
        lo *= 2;
        if (lo < -cap) fail(Err::NotArchimedean, "multiple search diverged; ordering not Archimedean?");
      }
    }
    while (hi - lo > 1) {
      std::int64_t mid = lo + (hi - lo) / 2;
      if (le(mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return lo;
  };

  std::int64_t two_k = std::int64_t(1) << K;
  Int a = Int(bracket(two_k));
  return Rat(a, Int(two_k));
}

}  // namespace ordalib
