#include "ordalib/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ordalib/error.hpp"

namespace ordalib {

IntPolynomial::IntPolynomial(std::initializer_list<long long> cs) {
  for (long long c : cs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<Int> cs) : coeffs_(std::move(cs)) { trim(); }

IntPolynomial IntPolynomial::monomial(const Int& c, int deg) {
  if (c == 0) return {};
  std::vector<Int> v(static_cast<std::size_t>(deg) + 1, Int(0));
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Int IntPolynomial::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPolynomial::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& r) const {
  std::vector<Int> out(std::max(coeffs_.size(), r.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) out[i] += r.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& r) const { return *this + r.neg(); }

IntPolynomial IntPolynomial::neg() const {
  std::vector<Int> out = coeffs_;
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& r) const {
  if (is_zero() || r.is_zero()) return {};
  std::vector<Int> out(coeffs_.size() + r.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * r.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Int> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Int(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& r) const {
  if (r.is_zero()) fail(Err::OutOfRange, "division by zero polynomial");
  std::vector<Int> rem = coeffs_;
  if (rem.size() < r.coeffs_.size()) {
    if (is_zero()) return {};
    fail(Err::Internal, "inexact polynomial division");
  }
  std::vector<Int> quot(rem.size() - r.coeffs_.size() + 1, Int(0));
  const Int& lead = r.coeffs_.back();
  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    Int top = rem[static_cast<std::size_t>(i) + r.coeffs_.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) fail(Err::Internal, "inexact polynomial division");
    Int q = top / lead;
    quot[static_cast<std::size_t>(i)] = q;
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j)
      rem[static_cast<std::size_t>(i) + j] -= q * r.coeffs_[j];
  }
  for (const auto& c : rem)
    if (c != 0) fail(Err::Internal, "inexact polynomial division");
  return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Int content = 0;
  for (const auto& c : coeffs_) content = gcd_int(content, c);
  std::vector<Int> out = coeffs_;
  Int div = coeffs_.back() > 0 ? content : -content;
  for (auto& c : out) c /= div;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::content_normalized() const {
  if (is_zero()) return {};
  Int content = 0;
  for (const auto& c : coeffs_) content = gcd_int(content, c);
  std::vector<Int> out = coeffs_;
  for (auto& c : out) c /= content;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::gcd(IntPolynomial a, IntPolynomial b) {
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    // Pseudo-remainder of a by b.
    IntPolynomial r = a;
    const Int lead = b.coeffs_.back();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int d = r.degree() - b.degree();
      Int c = r.coeffs_.back();
      std::vector<Int> scaled(r.coeffs_.size(), Int(0));
      for (std::size_t i = 0; i < r.coeffs_.size(); ++i) scaled[i] = r.coeffs_[i] * lead;
      IntPolynomial rs{std::vector<Int>(scaled)};
      r = rs - b * IntPolynomial::monomial(c, d);
    }
    a = b;
    b = r.primitive_part();
  }
  return a.primitive_part();
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int a = c > 0 ? c : Int(-c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c > 0 ? " + " : " - ");
    }
    if (a != 1 || i == 0) os << a.str();
    if (i >= 1) {
      if (a != 1) os << '*';
      os << 't';
      if (i >= 2) os << '^' << i;
    }
  }
  return os.str();
}

namespace {

int sign_at(const IntPolynomial& p, const Rat& x) { return sign_of(p.eval(x)); }

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
  // Content normalization below must not flip signs: Sturm counting reads
  // sign variations off the chain entries.
  std::vector<IntPolynomial> chain;
  chain.push_back(p.content_normalized());
  chain.push_back(p.derivative().content_normalized());
  while (!chain.back().is_zero()) {
    const IntPolynomial& a = chain[chain.size() - 2];
    const IntPolynomial& b = chain.back();
    IntPolynomial r = a;
    const Int lead = b.coeffs().back();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int d = r.degree() - b.degree();
      Int c = r.coeffs().back();
      std::vector<Int> scaled = r.coeffs();
      for (auto& v : scaled) v *= lead;
      if (lead < 0) {
        // Scale by lead^2 so the implicit factor stays positive.
        for (auto& v : scaled) v *= lead;
        c *= lead;
      }
      r = IntPolynomial(std::move(scaled)) - b * IntPolynomial::monomial(c, d);
    }
    chain.push_back(r.neg().content_normalized());
  }
  chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int sturm_count_open(const IntPolynomial& squarefree, const Rat& a, const Rat& b) {
  if (squarefree.is_zero()) fail(Err::OutOfRange, "zero polynomial");
  auto chain = sturm_chain(squarefree);
  std::vector<int> sa, sb;
  sa.reserve(chain.size());
  sb.reserve(chain.size());
  for (const auto& q : chain) {
    sa.push_back(sign_at(q, a));
    sb.push_back(sign_at(q, b));
  }
  int count = sign_variations(sa) - sign_variations(sb);  // roots in (a, b]
  if (sign_at(squarefree, b) == 0) --count;
  return count;
}

std::pair<int, int> positive_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) fail(Err::OutOfRange, "zero polynomial");
  // Remove roots at zero; they are outside (0, oo).
  std::vector<Int> cs = p.coeffs();
  std::size_t low = 0;
  while (low < cs.size() && cs[low] == 0) ++low;
  IntPolynomial q{std::vector<Int>(cs.begin() + static_cast<long>(low), cs.end())};
  if (q.degree() <= 0) return {0, 0};

  // Cauchy bound: all real roots lie in (0, M).
  Int lead = q.coeffs().back();
  if (lead < 0) lead = -lead;
  Int maxc = 0;
  for (const auto& c : q.coeffs()) {
    Int a = c < 0 ? Int(-c) : c;
    if (a > maxc) maxc = a;
  }
  Rat bound = Rat(maxc, lead) + 2;

  int with_mult = 0;
  int distinct = -1;
  IntPolynomial cur = q;
  while (cur.degree() >= 1) {
    IntPolynomial g = IntPolynomial::gcd(cur, cur.derivative());
    IntPolynomial sqfree = cur.divide_exact(g);
    int n = sturm_count_open(sqfree, Rat(0), bound);
    if (distinct < 0) distinct = n;
    with_mult += n;
    cur = g;
  }
  return {with_mult, distinct < 0 ? 0 : distinct};
}

}  // namespace ordalib
