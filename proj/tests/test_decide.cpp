#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ordalib/braid.hpp"
#include "ordalib/decide.hpp"

using namespace ordalib;

namespace {

// Brute-force enumeration over all sign choices of inverse pairs, filtered by
// the partition conditions; the backtracker must agree with this exactly.
std::vector<KPartition> brute_force_partitions(const Ball& ball) {
  const int n = static_cast<int>(ball.elements.size());
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> pair_of(static_cast<std::size_t>(n), -1);
  for (int i = 1; i < n; ++i) {
    int inv = ball.inverse[static_cast<std::size_t>(i)];
    if (inv == i) return {};
    if (i < inv) {
      pair_of[static_cast<std::size_t>(i)] = static_cast<int>(pairs.size());
      pair_of[static_cast<std::size_t>(inv)] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, inv);
    }
  }
  REQUIRE(pairs.size() <= 22);
  std::vector<KPartition> out;
  for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
    KPartition q;
    for (std::size_t pi = 0; pi < pairs.size(); ++pi)
      q.members.push_back((mask >> pi) & 1 ? pairs[pi].second : pairs[pi].first);
    std::sort(q.members.begin(), q.members.end());
    if (is_proper_k_partition(ball, q)) out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("partitions of Z: closure forces uniform signs") {
  auto z1 = Alphabet::of_names({"x"});
  Ball b = Oracle::free_abelian(z1).ball(3);
  auto parts = enumerate_k_partitions(b);
  REQUIRE(parts.size() == 2);
  // {x, x^2, x^3} and its inverse.
  for (const auto& q : parts) CHECK(q.members.size() == 3);
  CHECK(parts == brute_force_partitions(b));
}

TEST_CASE("partitions of Z^2: counts frozen and strictly increasing") {
  auto xy = Alphabet::of_names({"x", "y"});
  Oracle z2 = Oracle::free_abelian(xy);
  const std::vector<std::size_t> expected{4, 8, 16, 24};
  std::vector<std::size_t> got;
  for (int k = 1; k <= 4; ++k) got.push_back(enumerate_k_partitions(z2.ball(k)).size());
  CHECK(got == expected);
  for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i] > got[i - 1]);
}

TEST_CASE("backtracker equals brute force") {
  auto xy = Alphabet::of_names({"x", "y"});
  CHECK(enumerate_k_partitions(Oracle::free_abelian(xy).ball(2)) ==
        brute_force_partitions(Oracle::free_abelian(xy).ball(2)));
  CHECK(enumerate_k_partitions(Oracle::klein_bottle(xy).ball(2)) ==
        brute_force_partitions(Oracle::klein_bottle(xy).ball(2)));
  auto cr = catalog_lookup("crystallographic");
  Ball crb = oracle_for(cr).ball(2);
  CHECK(enumerate_k_partitions(crb) == brute_force_partitions(crb));
}

TEST_CASE("monotonicity: restrictions of (k+1)-partitions are k-partitions") {
  auto xy = Alphabet::of_names({"x", "y"});
  for (Oracle o : {Oracle::free_abelian(xy), Oracle::klein_bottle(xy)}) {
    Ball small = o.ball(2);
    Ball big = o.ball(3);
    for (const auto& q : enumerate_k_partitions(big)) {
      KPartition restricted;
      for (int e : q.members) {
        int idx = o.ball_lookup(small, big.elements[static_cast<std::size_t>(e)]);
        if (idx >= 0) restricted.members.push_back(idx);
      }
      std::sort(restricted.members.begin(), restricted.members.end());
      CHECK(is_proper_k_partition(small, restricted));
    }
  }
}

TEST_CASE("klein bottle: every partition is a cone restriction, stable in k") {
  auto xy = Alphabet::of_names({"x", "y"});
  Oracle ko = Oracle::klein_bottle(xy);
  for (int k = 1; k <= 5; ++k) {
    Ball b = ko.ball(k);
    auto parts = enumerate_k_partitions(b);
    CHECK(parts.size() == 4);
    int matching = 0;
    for (int s : {+1, -1})
      for (int t : {+1, -1}) {
        KPartition cone = restrict_predicate(
            b, [&](const Word& w) { return klein_cone_membership(s, t, w); });
        CHECK(is_proper_k_partition(b, cone));
        for (const auto& q : parts) matching += q == cone ? 1 : 0;
      }
    CHECK(matching == 4);
    // Every left-ordering of the Klein bottle group is Conradian.
    CHECK(enumerate_conradian_k_partitions(ko, b) == parts);
  }
}

TEST_CASE("klein cone membership examples") {
  auto xy = Alphabet::of_names({"x", "y"});
  CHECK(klein_cone_membership(+1, +1, Word::parse("x y^-5", xy)));
  CHECK(!klein_cone_membership(+1, +1, Word::parse("y^-1", xy)));
  CHECK(klein_cone_membership(+1, -1, Word::parse("y^-1", xy)));
}

TEST_CASE("conradian partitions of Z agree with plain ones") {
  auto z1 = Alphabet::of_names({"x"});
  Oracle o = Oracle::free_abelian(z1);
  Ball b = o.ball(3);
  CHECK(enumerate_conradian_k_partitions(o, b) == enumerate_k_partitions(b));
}

TEST_CASE("B_3: the Dehornoy cone is proper but not Conradian in the 4-ball") {
  Oracle bo = Oracle::braid(3);
  Ball b = bo.ball(4, 100000);
  KPartition dehornoy = restrict_predicate(b, [&](const Word& w) {
    BraidWord bw{3, w.letters()};
    return sigma_sign(bw).kind == SigmaSign::Positive;
  });
  CHECK(is_proper_k_partition(b, dehornoy));
  auto viol = conradian_violation(bo, b, dehornoy);
  REQUIRE(viol.has_value());
  // Frozen witness pair: g = s1 s2, h = s2^-1 s1 s2^-1.
  CHECK(b.elements[static_cast<std::size_t>(viol->first)].format() == "s1 s2");
  CHECK(b.elements[static_cast<std::size_t>(viol->second)].format() == "s2^-1 s1 s2^-1");
  // The witness is genuine: g, h are Dehornoy positive, g^{-1} h g^2 is not.
  const Word& wg = b.elements[static_cast<std::size_t>(viol->first)];
  const Word& wh = b.elements[static_cast<std::size_t>(viol->second)];
  auto sgn = [](const Word& w) { return sigma_sign(BraidWord{3, w.letters()}).kind; };
  CHECK(sgn(wg) == SigmaSign::Positive);
  CHECK(sgn(wh) == SigmaSign::Positive);
  CHECK(sgn(wg.inverse() * wh * wg * wg) == SigmaSign::Negative);
}

TEST_CASE("nonlo by partitions") {
  auto z1 = Alphabet::of_names({"x"});
  CHECK(nonlo_by_partitions(Oracle::free_abelian(z1), 3) == NonLOStatus::Undetermined);
  auto xy = Alphabet::of_names({"x", "y"});
  for (int k = 1; k <= 5; ++k)
    CHECK(nonlo_by_partitions(Oracle::klein_bottle(xy), k) == NonLOStatus::Undetermined);
  // Crystallographic group: refuted at the frozen minimal radius 2.
  auto cr = catalog_lookup("crystallographic");
  CHECK(nonlo_by_partitions(oracle_for(cr), 1) == NonLOStatus::Undetermined);
  CHECK(nonlo_by_partitions(oracle_for(cr), 2) == NonLOStatus::NonLeftOrderable);
}

TEST_CASE("semigroup sign test: crystallographic group") {
  auto cr = catalog_lookup("crystallographic");
  Oracle o = oracle_for(cr);
  auto result = semigroup_sign_test(o, cr.sign_test_words, 8);
  REQUIRE(result.refuted);
  CHECK(result.cases.size() == 4);
  for (const auto& c : result.cases) {
    CHECK(c.witness.size() <= 8);
    CHECK(replay_nonlo_case(o, cr.sign_test_words, c));
  }
}

TEST_CASE("semigroup sign test: Z is undetermined") {
  auto z1 = Alphabet::of_names({"x"});
  Oracle o = Oracle::free_abelian(z1);
  auto result = semigroup_sign_test(o, {Word::parse("x", z1)}, 8);
  CHECK(!result.refuted);
}

TEST_CASE("semigroup sign test rejects identity entries") {
  auto z1 = Alphabet::of_names({"x"});
  Oracle o = Oracle::free_abelian(z1);
  CHECK_THROWS_AS(semigroup_sign_test(o, {Word::identity(z1)}, 4), Error);
}

TEST_CASE("semigroup sign test: weeks group via hints") {
  auto weeks = catalog_lookup("weeks");
  Oracle o = oracle_for(weeks, RewriteBounds{20, 2, 50000});
  auto result = semigroup_sign_test(o, weeks.sign_test_words, 10, weeks.hints,
                                    &weeks.presentation);
  REQUIRE(result.refuted);
  CHECK(result.cases.size() == 8);
  for (const auto& c : result.cases) {
    REQUIRE(c.certificate.has_value());
    CHECK(replay_nonlo_case(o, weeks.sign_test_words, c, &weeks.presentation));
  }
}

TEST_CASE("blocking") {
  auto xy = Alphabet::of_names({"x1", "x2"});
  CHECK(blocks(Word::parse("x1 x2", xy), {+1, +1}));
  CHECK(!blocks(Word::parse("x1 x2^-1", xy), {+1, +1}));
  CHECK(blocks(Word::parse("x1^-1 x2^-1", xy), {+1, +1}));
  CHECK_THROWS_AS(blocks(Word::identity(xy), {+1, +1}), Error);
}

TEST_CASE("complete presentations") {
  for (int n = 2; n <= 5; ++n) {
    auto r = is_complete(presentation_sigma_n_41(n));
    CHECK(r.complete);
    CHECK(r.blocker_map.size() == (1u << (2 * n)));
  }
  Presentation free2 = Presentation::parse("gens: a b ; rels: ");
  auto rf = is_complete(free2);
  CHECK(!rf.complete);
  CHECK(rf.unblocked.size() == 4);

  // Crystallographic: incomplete as printed, complete with consequences.
  Presentation cr = presentation_crystallographic();
  CHECK(!is_complete(cr).complete);
  auto cons = consequences(cr, 8, 5000, 1);
  CHECK(is_complete(cr, cons).complete);

  // Tampered certificates are rejected.
  auto bad = cons;
  if (!bad.empty()) {
    bad.front().word = bad.front().word * Word::parse("a", cr.alphabet());
    CHECK_THROWS_AS(is_complete(cr, bad), Error);
  }
}

TEST_CASE("find blockers") {
  auto crystal = find_blockers(presentation_crystallographic(), 3, 8, 5000);
  REQUIRE(crystal.complete);
  CHECK(crystal.generation == 2);

  auto sigma = find_blockers(presentation_sigma_n_41(2), 2, 8, 2000);
  REQUIRE(sigma.complete);
  CHECK(sigma.generation == 0);

  auto klein = find_blockers(presentation_klein_xy(), 2, 10, 4000);
  CHECK(!klein.complete);
}

TEST_CASE("ordering metric") {
  auto xy = Alphabet::of_names({"x", "y"});
  std::vector<Word> enumeration;
  for (const auto& t : {"y", "x", "x y", "y^2", "x^2", "x y^-1", "y^3", "x^-1 y"})
    enumeration.push_back(Word::parse(t, xy));

  auto cone = [&](int s, int t) {
    return OrderPredicate([s, t](const Word& w) { return klein_cone_membership(s, t, w); });
  };
  CHECK(ordering_metric(cone(+1, +1), cone(+1, +1), enumeration) == Dyadic{});
  CHECK(ordering_metric(cone(+1, +1), cone(+1, -1), enumeration) == Dyadic{false, 1});

  // Ultrametric inequality on all triples of the four cones.
  std::vector<OrderPredicate> cones{cone(1, 1), cone(1, -1), cone(-1, 1), cone(-1, -1)};
  for (const auto& a : cones)
    for (const auto& b : cones)
      for (const auto& c : cones) {
        Dyadic ab = ordering_metric(a, b, enumeration);
        Dyadic bc = ordering_metric(b, c, enumeration);
        Dyadic ac = ordering_metric(a, c, enumeration);
        Dyadic mx = ab.leq(bc) ? bc : ab;
        CHECK(ac.leq(mx));
      }
}
