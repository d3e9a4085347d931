#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ordalib/magnus.hpp"

using namespace ordalib;

namespace {

AlphabetPtr f2() { return Alphabet::of_names({"x1", "x2"}); }

Monomial mono(std::initializer_list<int> vars) {
  Monomial m;
  m.vars = vars;
  return m;
}

Word rand_word(const AlphabetPtr& alpha, std::mt19937_64& rng, int maxlen) {
  std::uniform_int_distribution<int> len_d(0, maxlen);
  std::uniform_int_distribution<int> gen_d(0, alpha->size() - 1);
  std::uniform_int_distribution<int> sign_d(0, 1);
  Word w = Word::identity(alpha);
  int len = len_d(rng);
  for (int i = 0; i < len; ++i)
    w = w * Word::generator(alpha, gen_d(rng), sign_d(rng) ? 1 : -1);
  return w;
}

// All freely reduced words of letter-length <= maxlen.
std::vector<Word> all_reduced(const AlphabetPtr& alpha, int maxlen) {
  std::vector<Word> out{Word::identity(alpha)};
  std::vector<std::vector<int>> frontier{{}};
  for (int l = 1; l <= maxlen; ++l) {
    std::vector<std::vector<int>> next;
    for (const auto& ls : frontier) {
      for (int g = 1; g <= alpha->size(); ++g) {
        for (int dir : {+1, -1}) {
          int v = dir * g;
          if (!ls.empty() && ls.back() == -v) continue;
          auto nl = ls;
          nl.push_back(v);
          out.push_back(Word::from_letters(alpha, nl));
          next.push_back(std::move(nl));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("expansion of generators") {
  auto a = f2();
  TruncatedSeries s = magnus_expand(Word::parse("x1", a), 3);
  CHECK(s.coeff(mono({})) == 1);
  CHECK(s.coeff(mono({0})) == 1);
  CHECK(s.coeff(mono({0, 0})) == 0);

  TruncatedSeries inv = magnus_expand(Word::parse("x1^-1", a), 3);
  CHECK(inv.coeff(mono({})) == 1);
  CHECK(inv.coeff(mono({0})) == -1);
  CHECK(inv.coeff(mono({0, 0})) == 1);
  CHECK(inv.coeff(mono({0, 0, 0})) == -1);

  CHECK(s.mul(inv) == TruncatedSeries::one(3));
}

TEST_CASE("expansion of the conjugate example") {
  auto a = f2();
  TruncatedSeries s = magnus_expand(Word::parse("x1 x2^2 x1^-1", a), 2);
  // 1 + 2 X2 + 2 X1X2 - 2 X2X1 + X2^2
  TruncatedSeries expect(2);
  expect.add(mono({}), 1);
  expect.add(mono({1}), 2);
  expect.add(mono({0, 1}), 2);
  expect.add(mono({1, 0}), -2);
  expect.add(mono({1, 1}), 1);
  CHECK(s == expect);
}

TEST_CASE("series multiplication") {
  auto a = f2();
  TruncatedSeries x = magnus_expand(Word::parse("x1", a), 2);
  TruncatedSeries y = magnus_expand(Word::parse("x2", a), 2);
  TruncatedSeries xy = x.mul(y);
  CHECK(xy.coeff(mono({0, 1})) == 1);
  CHECK(xy.coeff(mono({1, 0})) == 0);

  TruncatedSeries sq = magnus_expand(Word::parse("x2^2", a), 2);
  CHECK(sq.coeff(mono({1})) == 2);
  CHECK(sq.coeff(mono({1, 1})) == 1);

  CHECK_THROWS_AS(x.mul(magnus_expand(Word::parse("x1", a), 3)), Error);
}

TEST_CASE("compare: book examples") {
  auto a = f2();
  CHECK(magnus_compare(Word::parse("x2^2", a), Word::parse("x1 x2^2 x1^-1", a)) == Cmp::Less);
  Word w = Word::parse("x1 x2^-1 x1", a);
  CHECK(magnus_compare(w, w) == Cmp::Equal);
  CHECK(magnus_compare(Word::parse("x1^2", a), Word::parse("x1^5", a)) == Cmp::Less);
  CHECK(magnus_compare(Word::parse("x1^-3", a), Word::parse("x1^-1", a)) == Cmp::Less);
}

TEST_CASE("leading terms") {
  auto a = f2();
  auto lt = magnus_leading_term(Word::parse("x1^3", a));
  REQUIRE(lt.has_value());
  CHECK(lt->first == mono({0}));
  CHECK(lt->second == 3);
  CHECK(!magnus_leading_term(Word::identity(a)).has_value());

  // Conjugation preserves the leading term.
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    Word w = rand_word(a, rng, 6);
    if (w.empty()) continue;
    Word g = rand_word(a, rng, 4);
    auto l1 = magnus_leading_term(w);
    auto l2 = magnus_leading_term(g * w * g.inverse());
    REQUIRE(l1.has_value());
    REQUIRE(l2.has_value());
    CHECK(l1->first == l2->first);
    CHECK(l1->second == l2->second);
  }
}

TEST_CASE("garside positive words are positive") {
  auto a = f2();
  CHECK(is_garside_positive(Word::parse("x1 x2", a)));
  CHECK(!is_garside_positive(Word::parse("x1 x2^-1", a)));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Word w = Word::identity(a);
    int len = 1 + static_cast<int>(rng() % 6);
    for (int j = 0; j < len; ++j) w = w * Word::generator(a, static_cast<int>(rng() % 2), 1);
    CHECK(is_garside_positive(w));
    CHECK(magnus_compare(Word::identity(a), w) == Cmp::Less);
  }
}

TEST_CASE("injectivity: compare equals free equality, exhaustive length <= 5") {
  auto a = f2();
  auto words = all_reduced(a, 5);
  // compare(u, v) == Equal iff u == v as reduced words.
  for (std::size_t i = 0; i < words.size(); i += 7) {
    for (std::size_t j = 0; j < words.size(); j += 3) {
      Cmp c = magnus_compare(words[i], words[j]);
      CHECK((c == Cmp::Equal) == (words[i] == words[j]));
    }
  }
}

TEST_CASE("bi-invariance on random triples") {
  auto a = f2();
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 400; ++i) {
    Word u = rand_word(a, rng, 6);
    Word v = rand_word(a, rng, 6);
    Word w = rand_word(a, rng, 6);
    Cmp base = magnus_compare(u, v);
    CHECK(magnus_compare(w * u, w * v) == base);
    CHECK(magnus_compare(u * w, v * w) == base);
  }
}

TEST_CASE("density: a strictly intermediate element exists") {
  auto a = f2();
  std::mt19937_64 rng(31337);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 150; ++i) {
    Word u = rand_word(a, rng, 6);
    Word v = rand_word(a, rng, 6);
    Cmp c = magnus_compare(u, v);
    if (c == Cmp::Equal) continue;
    if (c == Cmp::Greater) std::swap(u, v);
    Word w = u.inverse() * v;  // > 1

    // First try the halved first syllable; fall back to damping by an
    // element of strictly larger leading degree.
    std::optional<Word> between;
    const auto& syl = w.syllables().front();
    if (syl.exp > 1 || syl.exp < -1) {
      std::vector<Syllable> sylls = w.syllables();
      sylls.front().exp = syl.exp / 2;
      Word cand(a, sylls);
      if (magnus_compare(Word::identity(a), cand) == Cmp::Less &&
          magnus_compare(cand, w) == Cmp::Less)
        between = cand;
    }
    if (!between) {
      auto lead = magnus_leading_term(w);
      REQUIRE(lead.has_value());
      int degree = lead->first.degree();
      // Left-normed commutator [..[x1, x2], x2 ..] of length degree+1.
      Word c2 = Word::parse("x1^-1 x2^-1 x1 x2", a);
      Word cc = c2;
      for (int d = 2; d < degree + 1; ++d)
        cc = cc.inverse() * Word::parse("x2^-1", a) * cc * Word::parse("x2", a);
      auto clead = magnus_leading_term(cc);
      REQUIRE(clead.has_value());
      REQUIRE(clead->first.degree() == degree + 1);
      if (clead->second < 0) cc = cc.inverse();
      Word cand = w * cc.inverse();
      CHECK(magnus_compare(Word::identity(a), cand) == Cmp::Less);
      CHECK(magnus_compare(cand, w) == Cmp::Less);
      between = cand;
    }
    REQUIRE(between.has_value());
    Word z = u * *between;
    CHECK(magnus_compare(u, z) == Cmp::Less);
    CHECK(magnus_compare(z, v) == Cmp::Less);
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("group ring support: unique minimal and maximal product terms") {
  auto a = f2();
  std::mt19937_64 rng(555);
  for (int iter = 0; iter < 60; ++iter) {
    // Random supports of 3 distinct elements each.
    auto sample_support = [&]() {
      std::vector<Word> s;
      while (s.size() < 3) {
        Word w = rand_word(a, rng, 4);
        bool dup = false;
        for (const auto& t : s) dup = dup || t == w;
        if (!dup) s.push_back(w);
      }
      return s;
    };
    auto A = sample_support();
    auto B = sample_support();
    std::vector<Word> products;
    for (const auto& x : A)
      for (const auto& y : B) products.push_back(x * y);
    auto cmp_lt = [](const Word& p, const Word& q) { return magnus_compare(p, q) == Cmp::Less; };
    Word mn = products.front(), mx = products.front();
    for (const auto& p : products) {
      if (cmp_lt(p, mn)) mn = p;
      if (cmp_lt(mx, p)) mx = p;
    }
    int mn_count = 0, mx_count = 0;
    for (const auto& p : products) {
      if (p == mn) ++mn_count;
      if (p == mx) ++mx_count;
    }
    CHECK(mn_count == 1);
    CHECK(mx_count == 1);
  }
}

TEST_CASE("surface cover: shifted doubly indexed alphabets preserve order") {
  // Generators x[m,n] ordered lexicographically by subscript; translating
  // subscripts and conjugating preserves leading terms, hence positivity.
  std::vector<std::string> names, shifted_names;
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n) {
      names.push_back("x[" + std::to_string(m) + "," + std::to_string(n) + "]");
      shifted_names.push_back("x[" + std::to_string(m + 1) + "," + std::to_string(n + 2) + "]");
    }
  auto alpha = Alphabet::of_names(names);
  auto beta = Alphabet::of_names(shifted_names);

  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 100; ++iter) {
    Word w = rand_word(alpha, rng, 6);
    if (w.empty()) continue;
    // A covering translation shifts every subscript and conjugates by one
    // global element: x[m,n] -> g x[m+1,n+2] g^{-1}.
    Word g = rand_word(beta, rng, 4);
    Word shifted = Word::identity(beta);
    for (const auto& s : w.syllables()) shifted = shifted * Word::generator(beta, s.gen, s.exp);
    Word image = g * shifted * g.inverse();

    auto lt = magnus_leading_term(w);
    auto lt2 = magnus_leading_term(image);
    REQUIRE(lt.has_value());
    REQUIRE(lt2.has_value());
    // Leading terms survive conjugation, and the subscript shift maps
    // monomials monotonically (parallel alphabets share positions here).
    CHECK(lt2->first == lt->first);
    CHECK(lt2->second == lt->second);
    CHECK(magnus_compare(Word::identity(alpha), w) ==
          magnus_compare(Word::identity(beta), image));
  }
}
