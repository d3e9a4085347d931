#include "ordalib/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "ordalib/error.hpp"

namespace ordalib {

namespace {

AlphabetPtr sigma_alphabet(int strands) {
  static std::map<int, AlphabetPtr> cache;
  auto it = cache.find(strands);
  if (it != cache.end()) return it->second;
  std::vector<std::string> names;
  for (int i = 1; i < strands; ++i) names.push_back("s" + std::to_string(i));
  auto a = Alphabet::of_names(names);
  cache[strands] = a;
  return a;
}

std::vector<int> free_reduce_letters(const std::vector<int>& in) {
  std::vector<int> out;
  out.reserve(in.size());
  for (int v : in) {
    if (!out.empty() && out.back() == -v) {
      out.pop_back();
    } else {
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

BraidWord BraidWord::parse(const std::string& text, int strands) {
  if (strands < 2) fail(Err::OutOfRange, "braid group needs at least 2 strands");
  Word w = Word::parse(text, sigma_alphabet(strands));
  BraidWord b;
  b.strands = strands;
  for (const auto& s : w.syllables()) {
    int i = s.gen + 1;
    int step = s.exp > 0 ? 1 : -1;
    for (std::int64_t k = 0; k < std::llabs(s.exp); ++k) b.letters.push_back(step * i);
  }
  return b;
}

std::string BraidWord::format() const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ' ';
    os << 's' << std::abs(letters[i]);
    if (letters[i] < 0) os << "^-1";
  }
  return os.str();
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (strands != rhs.strands) fail(Err::StrandMismatch, "braids with different strand counts");
  BraidWord out = *this;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  out.letters = free_reduce_letters(out.letters);
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord out;
  out.strands = strands;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

BraidWord BraidWord::pow(std::int64_t n) const {
  BraidWord base = n < 0 ? inverse() : *this;
  std::int64_t k = n < 0 ? -n : n;
  BraidWord out;
  out.strands = strands;
  for (std::int64_t i = 0; i < k; ++i) out = out * base;
  return out;
}

std::string SigmaSign::str() const {
  switch (kind) {
    case Trivial:
      return "trivial";
    case Positive:
      return std::to_string(index) + "-positive";
    case Negative:
      return std::to_string(index) + "-negative";
  }
  return "?";
}

Permutation braid_permutation(const BraidWord& b) {
  Permutation p(static_cast<std::size_t>(b.strands));
  for (int i = 0; i < b.strands; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  for (int v : b.letters) {
    int i = std::abs(v);
    // Following the strands: positions i, i+1 swap at this crossing.
    for (auto& image : p) {
      if (image == i) {
        image = i + 1;
      } else if (image == i + 1) {
        image = i;
      }
    }
  }
  return p;
}

std::int64_t exponent_sum(const BraidWord& b) {
  std::int64_t s = 0;
  for (int v : b.letters) s += v > 0 ? 1 : -1;
  return s;
}

BraidWord handle_reduce(const BraidWord& b, std::int64_t step_cap) {
  std::vector<int> w = free_reduce_letters(b.letters);
  std::int64_t steps = 0;
  for (;;) {
    // First handle by closing position; it contains no nested handle.
    int open = -1, close = -1;
    for (std::size_t j = 0; j < w.size() && close < 0; ++j) {
      int i = std::abs(w[j]);
      for (std::size_t back = j; back-- > 0;) {
        int bi = std::abs(w[back]);
        if (bi > i) continue;
        if (bi == i && w[back] == -w[j]) {
          open = static_cast<int>(back);
          close = static_cast<int>(j);
        }
        break;
      }
    }
    if (close < 0) break;
    if (++steps > step_cap) fail(Err::NonTermination, "handle reduction step cap exceeded");

    int i = std::abs(w[static_cast<std::size_t>(close)]);
    int e = w[static_cast<std::size_t>(open)] > 0 ? 1 : -1;
    std::vector<int> next(w.begin(), w.begin() + open);
    for (int m = open + 1; m < close; ++m) {
      int v = w[static_cast<std::size_t>(m)];
      if (std::abs(v) == i + 1) {
        int d = v > 0 ? 1 : -1;
        next.push_back(-e * (i + 1));
        next.push_back(d * i);
        next.push_back(e * (i + 1));
      } else {
        next.push_back(v);
      }
    }
    next.insert(next.end(), w.begin() + close + 1, w.end());
    w = free_reduce_letters(next);
  }
  BraidWord out;
  out.strands = b.strands;
  out.letters = std::move(w);
  return out;
}

SigmaSign sigma_sign(const BraidWord& b, std::int64_t step_cap) {
  BraidWord r = handle_reduce(b, step_cap);
  if (r.letters.empty()) return SigmaSign{SigmaSign::Trivial, 0};
  int main_index = b.strands;
  for (int v : r.letters) main_index = std::min(main_index, std::abs(v));
  for (int v : r.letters) {
    if (std::abs(v) == main_index)
      return SigmaSign{v > 0 ? SigmaSign::Positive : SigmaSign::Negative, main_index};
  }
  fail(Err::Internal, "unreachable");
}

Cmp compare_dehornoy(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) fail(Err::StrandMismatch, "braids with different strand counts");
  SigmaSign s = sigma_sign(a.inverse() * b);
  if (s.kind == SigmaSign::Trivial) return Cmp::Equal;
  return s.kind == SigmaSign::Positive ? Cmp::Less : Cmp::Greater;
}

bool dd_membership(const BraidWord& b) {
  SigmaSign s = sigma_sign(b);
  if (s.kind == SigmaSign::Trivial) return false;
  bool odd = s.index % 2 == 1;
  return s.kind == SigmaSign::Positive ? odd : !odd;
}

BraidWord half_twist(int n) {
  if (n < 2) fail(Err::OutOfRange, "half twist needs n >= 2");
  BraidWord d;
  d.strands = n;
  for (int top = n - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) d.letters.push_back(i);
  return d;
}

BraidWord half_twist_pow(int n, std::int64_t k) { return half_twist(n).pow(k); }

namespace {

// Delta_n^{2k} <= b in the Dehornoy order.
bool floor_le(const BraidWord& b, std::int64_t k) {
  return compare_dehornoy(half_twist_pow(b.strands, 2 * k), b) != Cmp::Greater;
}

}  // namespace

std::int64_t dehornoy_floor(const BraidWord& b) {
  // max { k : Delta^{2k} <= b }, by doubling then bisection.
  std::int64_t lo, hi;  // invariant: floor_le(lo), !floor_le(hi)
  if (floor_le(b, 0)) {
    lo = 0;
    hi = 1;
    while (floor_le(b, hi)) {
      lo = hi;
      hi *= 2;
    }
  } else {
    hi = 0;
    lo = -1;
    while (!floor_le(b, lo)) {
      hi = lo;
      lo *= 2;
    }
  }
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (floor_le(b, mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

bool provably_prime(const BraidWord& b) {
  const int n = b.strands;
  if (compare_dehornoy(b, half_twist_pow(n, -4)) == Cmp::Less) return true;
  if (compare_dehornoy(b, half_twist_pow(n, 4)) == Cmp::Greater) return true;
  return false;
}

std::int64_t genus_bound(const BraidWord& b) {
  Permutation p = braid_permutation(b);
  std::vector<bool> seen(p.size(), false);
  int cycle = 0;
  int cur = 1;
  do {
    seen[static_cast<std::size_t>(cur - 1)] = true;
    ++cycle;
    cur = p[static_cast<std::size_t>(cur - 1)];
  } while (cur != 1 && !seen[static_cast<std::size_t>(cur - 1)]);
  if (cycle != b.strands) fail(Err::NotAKnot, "closure is a link, not a knot");

  std::int64_t f = dehornoy_floor(b);
  bool is_power = compare_dehornoy(b, half_twist_pow(b.strands, 2 * f)) == Cmp::Equal;
  std::int64_t k = std::max(f, is_power ? -f : -f - 1);
  return k;
}

// --- B_3 via <a, b | b a^2 b = a> ---------------------------------------

AlphabetPtr b3_ab_alphabet() {
  static AlphabetPtr alpha = Alphabet::of_names({"a", "b"});
  return alpha;
}

Word b3_to_ab(const BraidWord& b) {
  if (b.strands != 3) fail(Err::StrandMismatch, "translation defined for B_3 only");
  auto alpha = b3_ab_alphabet();
  Word a = Word::generator(alpha, 0);
  Word bb = Word::generator(alpha, 1);
  // s1 = a b, s2 = b^{-1}  (from a = s1 s2, b = s2^{-1}).
  Word s1 = a * bb;
  Word s2 = bb.inverse();
  Word out = Word::identity(alpha);
  for (int v : b.letters) {
    const Word& base = std::abs(v) == 1 ? s1 : s2;
    out = out * (v > 0 ? base : base.inverse());
  }
  return out;
}

namespace {

struct AbSyllables {
  std::vector<Syllable> s;  // over {a = 0, b = 1}

  void push(int gen, std::int64_t e) {
    if (e == 0) return;
    if (!s.empty() && s.back().gen == gen) {
      s.back().exp += e;
      if (s.back().exp == 0) s.pop_back();
      return;
    }
    s.push_back(Syllable{gen, e});
  }
};

// Rewrites W * a^{-3} (W positive in a and b, with at least one a) so that
// every a occurs with negative exponent, using a b^k a^{-1} = (a^{-1} b^{-1})^k.
std::vector<Syllable> fold_negative(const std::vector<Syllable>& w_in) {
  AbSyllables cur;
  for (const auto& s : w_in) cur.push(s.gen, s.exp);
  cur.push(0, -3);
  for (;;) {
    int ri = -1;
    for (int i = static_cast<int>(cur.s.size()) - 1; i >= 0; --i) {
      if (cur.s[static_cast<std::size_t>(i)].gen == 0 && cur.s[static_cast<std::size_t>(i)].exp > 0) {
        ri = i;
        break;
      }
    }
    if (ri < 0) break;
    auto at = [&](int i) -> Syllable& { return cur.s[static_cast<std::size_t>(i)]; };
    if (ri + 2 >= static_cast<int>(cur.s.size()) || at(ri + 1).gen != 1 || at(ri + 1).exp < 1 ||
        at(ri + 2).gen != 0 || at(ri + 2).exp >= 0) {
      fail(Err::Internal, "unexpected shape in B_3 normalization");
    }
    std::int64_t p = at(ri).exp;
    std::int64_t k = at(ri + 1).exp;
    std::int64_t m = at(ri + 2).exp;  // < 0
    AbSyllables next;
    for (int i = 0; i < ri; ++i) next.push(cur.s[static_cast<std::size_t>(i)].gen, cur.s[static_cast<std::size_t>(i)].exp);
    next.push(0, p - 1);
    for (std::int64_t t = 0; t < k; ++t) {
      next.push(0, -1);
      next.push(1, -1);
    }
    next.push(0, m + 1);
    for (std::size_t i = static_cast<std::size_t>(ri) + 3; i < cur.s.size(); ++i)
      next.push(cur.s[i].gen, cur.s[i].exp);
    cur = next;
  }
  return cur.s;
}

}  // namespace

Word b3_navas_normalize(const Word& w_in) {
  auto alpha = b3_ab_alphabet();
  Word w = Word::parse(w_in.format(), alpha);  // validates the alphabet

  // Eliminate negative letters: a^{-1} = a^2 * a^{-3}, b^{-1} = a^2 b a^2 * a^{-3};
  // powers of the central a^3 are collected in `ell`.
  std::int64_t ell = 0;
  AbSyllables pos;
  for (const auto& s : w.syllables()) {
    std::int64_t reps = std::llabs(s.exp);
    for (std::int64_t r = 0; r < reps; ++r) {
      if (s.gen == 0) {
        if (s.exp > 0) {
          pos.push(0, 1);
        } else {
          pos.push(0, 2);
          --ell;
        }
      } else {
        if (s.exp > 0) {
          pos.push(1, 1);
        } else {
          pos.push(0, 2);
          pos.push(1, 1);
          pos.push(0, 2);
          --ell;
        }
      }
    }
  }

  // Normalize the positive part: exponents of a stay below 3 (excess moves to
  // ell), and every interior b a^2 b collapses via b a^2 b = a.
  bool changed = true;
  while (changed) {
    changed = false;
    AbSyllables next;
    for (const auto& s : pos.s) {
      if (s.gen == 0 && s.exp >= 3) {
        ell += s.exp / 3;
        next.push(0, s.exp % 3);
        changed = true;
      } else {
        next.push(s.gen, s.exp);
      }
    }
    pos = next;
    for (std::size_t i = 0; i + 2 < pos.s.size(); ++i) {
      if (pos.s[i].gen == 1 && pos.s[i + 1].gen == 0 && pos.s[i + 1].exp == 2 &&
          pos.s[i + 2].gen == 1) {
        AbSyllables out;
        for (std::size_t j = 0; j < i; ++j) out.push(pos.s[j].gen, pos.s[j].exp);
        out.push(1, pos.s[i].exp - 1);
        out.push(0, 1);
        out.push(1, pos.s[i + 2].exp - 1);
        for (std::size_t j = i + 3; j < pos.s.size(); ++j) out.push(pos.s[j].gen, pos.s[j].exp);
        pos = out;
        changed = true;
        break;
      }
    }
  }

  bool has_b = false;
  bool has_a = false;
  std::int64_t a_total = 0;
  for (const auto& s : pos.s) {
    if (s.gen == 1) has_b = true;
    if (s.gen == 0) {
      has_a = true;
      a_total += s.exp;
    }
  }

  std::vector<Syllable> result;
  if (!has_b) {
    std::int64_t e = a_total + 3 * ell;
    if (e != 0) result.push_back(Syllable{0, e});
  } else if (ell >= 0) {
    result = pos.s;
    if (ell > 0) {
      AbSyllables out;
      for (const auto& s : result) out.push(s.gen, s.exp);
      out.push(0, 3 * ell);
      result = out.s;
    }
  } else if (!has_a) {
    result = pos.s;
    result.push_back(Syllable{0, 3 * ell});
  } else {
    result = fold_negative(pos.s);
    if (ell + 1 < 0) {
      AbSyllables out;
      for (const auto& s : result) out.push(s.gen, s.exp);
      out.push(0, 3 * (ell + 1));
      result = out.s;
    }
  }
  return Word(alpha, result);
}

// --- Garside left normal form -------------------------------------------

namespace {

using Perm = std::vector<int>;  // entry at position p-1 = image of p, 1-based

Perm perm_id(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  return p;
}

Perm perm_omega(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - i;
  return p;
}

bool is_id(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Perm inverse_perm(const Perm& p) {
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return inv;
}

// Starting set: sigma_i left-divides the simple braid of pi.
bool in_starting_set(const Perm& p, int i) { return p[static_cast<std::size_t>(i - 1)] > p[static_cast<std::size_t>(i)]; }

// Finishing set: sigma_i right-divides.
bool in_finishing_set(const Perm& p, int i) {
  Perm inv = inverse_perm(p);
  return inv[static_cast<std::size_t>(i - 1)] > inv[static_cast<std::size_t>(i)];
}

void swap_entries(Perm& p, int i) { std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]); }

void swap_values(Perm& p, int i) {
  for (auto& v : p) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
}

Perm tau_conjugate(const Perm& p) {
  int n = static_cast<int>(p.size());
  Perm out(p.size());
  for (int x = 1; x <= n; ++x)
    out[static_cast<std::size_t>(x - 1)] = n + 1 - p[static_cast<std::size_t>(n - x)];
  return out;
}

// Canonical positive word of a permutation braid: peel the smallest descent.
void spell_simple(Perm p, std::vector<int>& out) {
  int n = static_cast<int>(p.size());
  for (;;) {
    int i = 0;
    for (int j = 1; j < n; ++j) {
      if (p[static_cast<std::size_t>(j - 1)] > p[static_cast<std::size_t>(j)]) {
        i = j;
        break;
      }
    }
    if (i == 0) return;
    out.push_back(i);
    swap_entries(p, i);
  }
}

}  // namespace

BraidWord garside_normal_form(const BraidWord& b) {
  const int n = b.strands;
  long long power = 0;
  std::vector<Perm> simples;

  for (int v : b.letters) {
    int i = std::abs(v);
    if (v > 0) {
      Perm s = perm_id(n);
      swap_entries(s, i);
      simples.push_back(s);
    } else {
      --power;
      for (auto& s : simples) s = tau_conjugate(s);
      // Delta * sigma_i^{-1}: apply omega, then the crossing at (i, i+1).
      Perm s = perm_omega(n);
      for (auto& image : s) {
        if (image == i) {
          image = i + 1;
        } else if (image == i + 1) {
          image = i;
        }
      }
      simples.push_back(s);
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < simples.size(); ++j) {
      Perm& a = simples[j];
      Perm& c = simples[j + 1];
      for (;;) {
        int move = 0;
        for (int i = 1; i < n; ++i) {
          if (in_starting_set(c, i) && !in_finishing_set(a, i)) {
            move = i;
            break;
          }
        }
        if (move == 0) break;
        swap_values(a, move);   // a := a * sigma_i
        swap_entries(c, move);  // c := sigma_i^{-1} * c
        changed = true;
      }
    }
    std::vector<Perm> kept;
    for (auto& s : simples) {
      if (!is_id(s)) kept.push_back(s);
    }
    if (kept.size() != simples.size()) changed = true;
    simples = std::move(kept);
  }

  Perm omega = perm_omega(n);
  std::size_t lead = 0;
  while (lead < simples.size() && simples[lead] == omega) {
    ++power;
    ++lead;
  }

  BraidWord out;
  out.strands = n;
  BraidWord delta = half_twist(n);
  if (power >= 0) {
    for (long long k = 0; k < power; ++k)
      out.letters.insert(out.letters.end(), delta.letters.begin(), delta.letters.end());
  } else {
    BraidWord dinv = delta.inverse();
    for (long long k = 0; k < -power; ++k)
      out.letters.insert(out.letters.end(), dinv.letters.begin(), dinv.letters.end());
  }
  for (std::size_t j = lead; j < simples.size(); ++j) spell_simple(simples[j], out.letters);
  return out;
}

// --- Burau and the Alexander polynomial -----------------------------------

namespace {

using LMat = std::vector<std::vector<Laurent>>;

LMat identity_matrix(int m) {
  LMat out(static_cast<std::size_t>(m), std::vector<Laurent>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Laurent::one();
  return out;
}

LMat mat_mul(const LMat& a, const LMat& b) {
  int m = static_cast<int>(a.size());
  LMat out(static_cast<std::size_t>(m), std::vector<Laurent>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero()) continue;
      for (int j = 0; j < m; ++j)
        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    }
  return out;
}

LMat burau_letter(int n, int letter) {
  const int m = n - 1;
  const int i = std::abs(letter);
  const bool pos = letter > 0;
  LMat M = identity_matrix(m);
  const Laurent t(1, 1), tinv(1, -1), one = Laurent::one(), mt(-1, 1), mtinv(-1, -1);
  auto set = [&](int r, int c, const Laurent& v) {
    M[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = v;
  };
  if (pos) {
    if (i == 1) {
      set(1, 1, mt);
      if (m >= 2) set(2, 1, one);
    } else if (i == m) {
      set(m - 1, m, t);
      set(m, m, mt);
    } else {
      set(i - 1, i, t);
      set(i, i, mt);
      set(i + 1, i, one);
    }
  } else {
    if (i == 1) {
      set(1, 1, mtinv);
      if (m >= 2) set(2, 1, tinv);
    } else if (i == m) {
      set(m - 1, m, one);
      set(m, m, mtinv);
    } else {
      set(i - 1, i, one);
      set(i, i, mtinv);
      set(i + 1, i, tinv);
    }
  }
  return M;
}

Laurent det_laurent(LMat a) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return Laurent::one();
  // Cofactor expansion along the first column (matrices here are small).
  if (m == 1) return a[0][0];
  Laurent acc;
  for (int r = 0; r < m; ++r) {
    if (a[static_cast<std::size_t>(r)][0].is_zero()) continue;
    LMat sub;
    sub.reserve(static_cast<std::size_t>(m - 1));
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      std::vector<Laurent> row(a[static_cast<std::size_t>(i)].begin() + 1, a[static_cast<std::size_t>(i)].end());
      sub.push_back(std::move(row));
    }
    Laurent term = a[static_cast<std::size_t>(r)][0] * det_laurent(std::move(sub));
    acc = (r % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

std::vector<std::vector<Laurent>> burau_reduced(const BraidWord& b) {
  LMat acc = identity_matrix(b.strands - 1);
  for (int v : b.letters) acc = mat_mul(acc, burau_letter(b.strands, v));
  return acc;
}

IntPolynomial alexander_from_braid(const BraidWord& b) {
  Permutation p = braid_permutation(b);
  std::vector<bool> seen(p.size(), false);
  int cycle = 0;
  int cur = 1;
  do {
    seen[static_cast<std::size_t>(cur - 1)] = true;
    ++cycle;
    cur = p[static_cast<std::size_t>(cur - 1)];
  } while (cur != 1 && !seen[static_cast<std::size_t>(cur - 1)]);
  if (cycle != b.strands) fail(Err::NotAKnot, "closure is a link, not a knot");

  const int n = b.strands;
  LMat M = burau_reduced(b);
  for (int i = 0; i < n - 1; ++i)
    M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] - Laurent::one();
  Laurent D = det_laurent(std::move(M));

  // Delta(t) = det(Burau(b) - I) (1 - t) / (1 - t^n), up to units.
  Laurent num = D * (Laurent(1, 0) - Laurent(1, 1));
  IntPolynomial P = num.shifted_polynomial();
  std::vector<Int> den(static_cast<std::size_t>(n) + 1, Int(0));
  den[0] = 1;
  den[static_cast<std::size_t>(n)] = -1;
  IntPolynomial Q{std::vector<Int>(den)};
  IntPolynomial R;
  try {
    R = P.divide_exact(Q);
  } catch (const Error&) {
    fail(Err::NormalizationFailure, "Burau determinant not divisible by 1 - t^n");
  }

  // Normalize: lowest degree zero and positive constant coefficient.
  std::vector<Int> cs = R.coeffs();
  std::size_t low = 0;
  while (low < cs.size() && cs[low] == 0) ++low;
  std::vector<Int> shifted(cs.begin() + static_cast<long>(low), cs.end());
  if (shifted.empty()) fail(Err::NormalizationFailure, "zero Alexander polynomial");
  if (shifted.front() < 0)
    for (auto& c : shifted) c = -c;
  IntPolynomial out{std::vector<Int>(shifted)};
  Int at_one = out.eval(Int(1));
  if (at_one != 1 && at_one != -1)
    fail(Err::NormalizationFailure, "Alexander polynomial with |Delta(1)| != 1");
  return out;
}

}  // namespace ordalib
