#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ordalib/word.hpp"

using namespace ordalib;

namespace {

AlphabetPtr xy() { return Alphabet::of_names({"x", "y"}); }

Word rand_reduced_word(const AlphabetPtr& alpha, std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> gen_d(0, alpha->size() - 1);
  std::uniform_int_distribution<int> sign_d(0, 1);
  std::vector<int> letters;
  while (static_cast<int>(letters.size()) < len) {
    int g = gen_d(rng);
    int v = (sign_d(rng) ? 1 : -1) * (g + 1);
    if (!letters.empty() && letters.back() == -v) continue;
    letters.push_back(v);
  }
  return Word::from_letters(alpha, letters);
}

}  // namespace

TEST_CASE("parse basic forms") {
  auto a = xy();
  Word w = Word::parse("x y^-1 x^2", a);
  REQUIRE(w.syllable_count() == 3);
  CHECK(w.syllables()[0].exp == 1);
  CHECK(w.syllables()[1].exp == -1);
  CHECK(w.syllables()[2].exp == 2);
  CHECK(w.format() == "x y^-1 x^2");

  CHECK(Word::parse("x x^-1", a).empty());
  CHECK(Word::parse("1", a).empty());
  CHECK(Word::parse("", a).empty());
  CHECK(Word::parse("x*y^-1*x^2", a) == w);

  auto ab = Alphabet::of_names({"a", "b"});
  Word v = Word::parse("a^2 b a^2", ab);
  REQUIRE(v.syllable_count() == 3);
  CHECK(v.length() == 5);
}

TEST_CASE("parse errors") {
  auto a = xy();
  CHECK_THROWS_AS(Word::parse("z", a), Error);
  CHECK_THROWS_AS(Word::parse("x^0", a), Error);
  CHECK_THROWS_AS(Word::parse("x^q", a), Error);
  CHECK_THROWS_AS(Word::parse("x^1.5", a), Error);
}

TEST_CASE("concat reduces freely") {
  auto a = xy();
  CHECK((Word::parse("x", a) * Word::parse("x^-1", a)).empty());
  CHECK((Word::parse("x", a) * Word::parse("y", a)).format() == "x y");
  CHECK((Word::parse("x y", a) * Word::parse("y^-1 x", a)).format() == "x^2");
}

TEST_CASE("alphabet mismatch is an error") {
  auto a = xy();
  auto b = Alphabet::of_names({"a", "b"});
  CHECK_THROWS_AS(Word::parse("x", a) * Word::parse("a", b), Error);
}

TEST_CASE("invert") {
  auto a = xy();
  CHECK(Word::parse("x y^-1", a).inverse().format() == "y x^-1");
  CHECK(Word::identity(a).inverse().empty());
  CHECK(Word::parse("x^2 y", a).inverse().format() == "y^-1 x^-2");
  Word w = Word::parse("x y^2 x^-1 y", a);
  CHECK((w * w.inverse()).empty());
  CHECK(w.inverse().inverse() == w);
}

TEST_CASE("cyclic reduction") {
  auto a = xy();
  auto [c1, k1] = Word::parse("x y x^-1", a).cyclically_reduce();
  CHECK(c1.format() == "x");
  CHECK(k1.format() == "y");

  auto [c2, k2] = Word::parse("y", a).cyclically_reduce();
  CHECK(c2.empty());
  CHECK(k2.format() == "y");

  // The conjugator/core decomposition always reassembles the input.
  auto [c3, k3] = Word::parse("x^-1 y x^2 y x", a).cyclically_reduce();
  CHECK(c3.format() == "x^-1");
  CHECK(k3.format() == "y x^2 y");
  CHECK(c3 * k3 * c3.inverse() == Word::parse("x^-1 y x^2 y x", a));

  // First and last letters of equal sign do not cancel.
  auto [c4, k4] = Word::parse("x^-1 y x^2 y x^-1", a).cyclically_reduce();
  CHECK(c4.empty());
  CHECK(k4 == Word::parse("x^-1 y x^2 y x^-1", a));
}

TEST_CASE("roundtrip and algebra properties on random words") {
  auto a = xy();
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 500; ++iter) {
    Word u = rand_reduced_word(a, rng, 1 + static_cast<int>(rng() % 64));
    CHECK(Word::parse(u.format(), a) == u);
    Word v = rand_reduced_word(a, rng, 1 + static_cast<int>(rng() % 16));
    Word w = rand_reduced_word(a, rng, 1 + static_cast<int>(rng() % 16));
    CHECK((u * v) * w == u * (v * w));
    CHECK((u * v).length() <= u.length() + v.length());
    auto [c, core] = u.cyclically_reduce();
    CHECK(c * core * c.inverse() == u);
    if (!core.empty()) {
      CHECK((core.syllables().front().gen != core.syllables().back().gen ||
             (core.syllables().front().exp > 0) == (core.syllables().back().exp > 0)));
    }
  }
}

TEST_CASE("doubly indexed generators") {
  auto a = Alphabet::of_names({"x[0,0]", "x[0,1]", "x[1,0]"});
  Word w = Word::parse("x[0,0] x[1,0]^-2", a);
  CHECK(w.format() == "x[0,0] x[1,0]^-2");
  CHECK(Word::parse(w.format(), a) == w);
}
