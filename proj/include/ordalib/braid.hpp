// Braid words, handle reduction and the Dehornoy ordering, Garside normal
// form, the Dubrovina-Dubrovin cone, Dehornoy floors and their knot-theoretic
// applications, and reduced Burau matrices.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordalib/laurent.hpp"
#include "ordalib/poly.hpp"
#include "ordalib/word.hpp"

namespace ordalib {

struct BraidWord {
  int strands = 2;
  std::vector<int> letters;  // +i / -i encodes sigma_i^{+-1}, 1 <= i < strands

  static BraidWord parse(const std::string& text, int strands);
  std::string format() const;

  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord inverse() const;
  BraidWord pow(std::int64_t n) const;
  bool is_identity_word() const { return letters.empty(); }

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands == b.strands && a.letters == b.letters;
  }
};

struct SigmaSign {
  enum Kind { Trivial, Positive, Negative } kind = Trivial;
  int index = 0;  // main generator index when not Trivial

  friend bool operator==(const SigmaSign& a, const SigmaSign& b) {
    return a.kind == b.kind && (a.kind == Trivial || a.index == b.index);
  }
  std::string str() const;
};

using Permutation = std::vector<int>;  // images of 1..n, 1-based in slot 0..n-1

// Follows the strands left to right, so perm(uv) = perm(v) o perm(u).
Permutation braid_permutation(const BraidWord& b);
std::int64_t exponent_sum(const BraidWord& b);

// Iterated handle reduction (innermost-first).  Output represents the same
// braid and is sigma-reduced: the lowest generator index present occurs with
// one uniform sign.  step_cap guards against implementation bugs only.
BraidWord handle_reduce(const BraidWord& b, std::int64_t step_cap = 1000000);

SigmaSign sigma_sign(const BraidWord& b, std::int64_t step_cap = 1000000);
Cmp compare_dehornoy(const BraidWord& a, const BraidWord& b);

bool dd_membership(const BraidWord& b);  // Dubrovina-Dubrovin cone

BraidWord half_twist(int n);
BraidWord half_twist_pow(int n, std::int64_t k);  // Delta_n^k

std::int64_t dehornoy_floor(const BraidWord& b);
bool provably_prime(const BraidWord& b);
std::int64_t genus_bound(const BraidWord& b);  // NotAKnot unless closure is a knot

// Normalization of words over <a, b | b a^2 b = a>, the two-generator
// presentation of B_3 with a = s1 s2 and b = s2^-1.  The result equals the
// input in the group and carries all its `a` letters with one uniform sign
// (possibly none, in which case it is a power of b).
Word b3_navas_normalize(const Word& w);

// Alphabet {a, b} used by b3_navas_normalize, and the translation of a braid
// word to it.
AlphabetPtr b3_ab_alphabet();
Word b3_to_ab(const BraidWord& b);

// Garside left normal form: canonical representative word,
// Delta^p s_1 ... s_m with left-weighted permutation braids.
BraidWord garside_normal_form(const BraidWord& b);

std::vector<std::vector<Laurent>> burau_reduced(const BraidWord& b);
IntPolynomial alexander_from_braid(const BraidWord& b);

}  // namespace ordalib
