#include "ordalib/decide.hpp"

#include <algorithm>
#include <deque>

#include "ordalib/error.hpp"

namespace ordalib {

bool KPartition::contains(int e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

namespace {

// Conradian closure table entry: (g, h) -> index of g^{-1} h g^2, if in ball.
using ClosureTriples = std::vector<std::tuple<int, int, int>>;

struct PartitionSearch {
  const Ball& ball;
  const ClosureTriples* conradian = nullptr;
  int n;
  std::vector<int8_t> state;  // 0 unknown, 1 in Q, 2 inverse in Q
  std::vector<int> trail;
  std::vector<KPartition> out;

  explicit PartitionSearch(const Ball& b, const ClosureTriples* c) : ball(b), conradian(c), n(static_cast<int>(b.elements.size())) {
    state.assign(static_cast<std::size_t>(n), 0);
  }

  bool assign(int e, std::deque<int>& queue) {
    if (state[static_cast<std::size_t>(e)] == 1) return true;
    if (state[static_cast<std::size_t>(e)] == 2) return false;
    int inv = ball.inverse[static_cast<std::size_t>(e)];
    if (inv == e) return false;  // 2-torsion: no partition can exist
    state[static_cast<std::size_t>(e)] = 1;
    state[static_cast<std::size_t>(inv)] = 2;
    trail.push_back(e);
    queue.push_back(e);
    return true;
  }

  void rollback(std::size_t mark) {
    while (trail.size() > mark) {
      int e = trail.back();
      trail.pop_back();
      state[static_cast<std::size_t>(e)] = 0;
      state[static_cast<std::size_t>(ball.inverse[static_cast<std::size_t>(e)])] = 0;
    }
  }

  bool propagate(std::deque<int>& queue) {
    while (!queue.empty()) {
      int e = queue.front();
      queue.pop_front();
      for (int f = 1; f < n; ++f) {
        if (state[static_cast<std::size_t>(f)] != 1) continue;
        for (auto [x, y] : {std::pair<int, int>{e, f}, {f, e}}) {
          int prod = ball.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
          if (prod < 0) continue;
          if (prod == 0) return false;  // g h = 1 with g, h both in Q
          if (!assign(prod, queue)) return false;
        }
      }
      if (conradian) {
        for (const auto& [g, h, t] : *conradian) {
          if (state[static_cast<std::size_t>(g)] == 1 && state[static_cast<std::size_t>(h)] == 1) {
            if (t == 0) return false;
            if (!assign(t, queue)) return false;
          }
        }
      }
    }
    return true;
  }

  void search(int next_element) {
    int e = next_element;
    while (e < n && state[static_cast<std::size_t>(e)] != 0) ++e;
    if (e >= n) {
      KPartition q;
      for (int i = 1; i < n; ++i)
        if (state[static_cast<std::size_t>(i)] == 1) q.members.push_back(i);
      out.push_back(std::move(q));
      return;
    }
    for (int choice : {e, ball.inverse[static_cast<std::size_t>(e)]}) {
      std::size_t mark = trail.size();
      std::deque<int> queue;
      if (assign(choice, queue) && propagate(queue)) search(e + 1);
      rollback(mark);
    }
  }
};

std::vector<KPartition> enumerate_partitions_impl(const Ball& ball, const ClosureTriples* conr) {
  for (std::size_t i = 1; i < ball.elements.size(); ++i)
    if (ball.inverse[i] == static_cast<int>(i)) return {};  // 2-torsion
  PartitionSearch s(ball, conr);
  s.search(1);
  std::sort(s.out.begin(), s.out.end());
  return s.out;
}

}  // namespace

std::vector<KPartition> enumerate_k_partitions(const Ball& ball) {
  return enumerate_partitions_impl(ball, nullptr);
}

namespace {

ClosureTriples conradian_triples(const Oracle& oracle, const Ball& ball) {
  ClosureTriples out;
  const int n = static_cast<int>(ball.elements.size());
  for (int g = 1; g < n; ++g) {
    const Word& wg = ball.elements[static_cast<std::size_t>(g)];
    for (int h = 1; h < n; ++h) {
      const Word& wh = ball.elements[static_cast<std::size_t>(h)];
      Word t = wg.inverse() * wh * wg * wg;
      int idx = oracle.ball_lookup(ball, t);
      if (idx >= 0) out.emplace_back(g, h, idx);
    }
  }
  return out;
}

}  // namespace

std::vector<KPartition> enumerate_conradian_k_partitions(const Oracle& oracle, const Ball& ball) {
  ClosureTriples conr = conradian_triples(oracle, ball);
  return enumerate_partitions_impl(ball, &conr);
}

std::optional<std::pair<int, int>> conradian_violation(const Oracle& oracle, const Ball& ball,
                                                       const KPartition& q) {
  for (int g : q.members) {
    const Word& wg = ball.elements[static_cast<std::size_t>(g)];
    for (int h : q.members) {
      const Word& wh = ball.elements[static_cast<std::size_t>(h)];
      Word t = wg.inverse() * wh * wg * wg;
      int idx = oracle.ball_lookup(ball, t);
      if (idx >= 0 && !q.contains(idx)) return std::make_pair(g, h);
    }
  }
  return std::nullopt;
}

NonLOStatus nonlo_by_partitions(const Oracle& oracle, int k, std::int64_t max_elements) {
  Ball b = oracle.ball(k, max_elements);
  return enumerate_k_partitions(b).empty() ? NonLOStatus::NonLeftOrderable
                                           : NonLOStatus::Undetermined;
}

// --- semigroup sign test -----------------------------------------------------

namespace {

Word hint_product(const std::vector<Word>& X, const NonLOCase& c) {
  Word acc = Word::identity(X.front().alphabet());
  for (int idx : c.witness) {
    const Word& x = X[static_cast<std::size_t>(idx)];
    acc = acc * (c.signs[static_cast<std::size_t>(idx)] > 0 ? x : x.inverse());
  }
  return acc;
}

std::optional<std::vector<int>> search_identity_product(const Oracle& oracle,
                                                        const std::vector<Word>& X,
                                                        const std::vector<int>& signs,
                                                        int max_product_len) {
  // BFS over right-multiplications; states deduplicated by canonical key when
  // available, else by the freely reduced word.
  struct Node {
    Word w;
    int depth;
    int parent;
    int gen;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> seen;
  auto key_of = [&](const Word& w) {
    auto k = oracle.canonical_key(w);
    return k ? *k : w.key();
  };

  std::deque<int> queue;
  Word id = Word::identity(X.front().alphabet());
  for (std::size_t i = 0; i < X.size(); ++i) {
    Word w = signs[i] > 0 ? X[i] : X[i].inverse();
    std::string k = key_of(w);
    if (seen.count(k)) continue;
    seen.emplace(k, static_cast<int>(nodes.size()));
    nodes.push_back(Node{w, 1, -1, static_cast<int>(i)});
    queue.push_back(static_cast<int>(nodes.size()) - 1);
  }

  auto witness = [&](int at) {
    std::vector<int> out;
    while (at >= 0) {
      out.push_back(nodes[static_cast<std::size_t>(at)].gen);
      at = nodes[static_cast<std::size_t>(at)].parent;
    }
    std::reverse(out.begin(), out.end());
    return out;
  };

  for (std::size_t qi = 0; qi < nodes.size(); ++qi) {
    // identity check on dequeue keeps the oracle calls bounded
    const Node node = nodes[qi];
    if (oracle.equal(node.w, id).value == OracleVerdict::Equal) return witness(static_cast<int>(qi));
    if (node.depth >= max_product_len) continue;
    for (std::size_t i = 0; i < X.size(); ++i) {
      Word w = node.w * (signs[i] > 0 ? X[i] : X[i].inverse());
      std::string k = key_of(w);
      if (seen.count(k)) continue;
      seen.emplace(k, static_cast<int>(nodes.size()));
      nodes.push_back(Node{w, node.depth + 1, static_cast<int>(qi), static_cast<int>(i)});
    }
  }
  return std::nullopt;
}

}  // namespace

bool replay_nonlo_case(const Oracle& oracle, const std::vector<Word>& X, const NonLOCase& c,
                       const Presentation* hint_presentation) {
  Word prod = hint_product(X, c);
  if (c.certificate) {
    if (hint_presentation == nullptr) return false;
    return replay_certificate(*hint_presentation, prod, *c.certificate);
  }
  return oracle.is_trivial(prod).value == OracleVerdict::Equal;
}

SemigroupSignResult semigroup_sign_test(const Oracle& oracle, const std::vector<Word>& X,
                                        int max_product_len,
                                        const std::vector<RefutationHint>& hints,
                                        const Presentation* hint_presentation) {
  if (X.empty()) fail(Err::OutOfRange, "sign test needs a nonempty word list");
  for (const auto& x : X)
    if (oracle.is_trivial(x).value == OracleVerdict::Equal)
      fail(Err::IdentityInList, "sign test list contains the identity");

  const std::size_t n = X.size();
  SemigroupSignResult result;
  result.refuted = true;

  for (std::size_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> signs(n);
    for (std::size_t i = 0; i < n; ++i) signs[i] = (mask >> i) & 1 ? -1 : +1;

    const RefutationHint* hint = nullptr;
    for (const auto& h : hints)
      if (h.signs == signs) {
        hint = &h;
        break;
      }

    if (hint != nullptr) {
      NonLOCase c{signs, hint->witness,
                  hint->certificate.empty() ? std::nullopt
                                            : std::optional<RewriteCertificate>(hint->certificate)};
      if (!replay_nonlo_case(oracle, X, c, hint_presentation))
        fail(Err::Internal, "refutation hint failed to replay");
      result.cases.push_back(std::move(c));
      continue;
    }

    auto witness = search_identity_product(oracle, X, signs, max_product_len);
    if (!witness) return SemigroupSignResult{false, {}};
    NonLOCase c{signs, *witness, std::nullopt};
    // For bounded backends, attach the triviality certificate of the product.
    Word prod = hint_product(X, c);
    auto verdict = oracle.is_trivial(prod);
    if (verdict.certificate) c.certificate = verdict.certificate;
    result.cases.push_back(std::move(c));
  }
  return result;
}

// --- complete presentations --------------------------------------------------

bool blocks(const Word& relator, const std::vector<int>& signs) {
  if (relator.empty()) fail(Err::EmptyRelator, "blocking is undefined for the empty relator");
  bool all_pos = true, all_neg = true;
  for (const auto& s : relator.syllables()) {
    std::int64_t v = signs[static_cast<std::size_t>(s.gen)] * s.exp;
    if (v > 0) all_neg = false;
    if (v < 0) all_pos = false;
  }
  return all_pos || all_neg;
}

CompletenessResult is_complete(const Presentation& p, const std::vector<Consequence>& extra) {
  for (const auto& c : extra)
    if (!replay_certificate(p, c.word, c.certificate))
      fail(Err::UnverifiedExtraRelator, "extra relator lacks a valid triviality certificate");

  CompletenessResult out;
  out.words = p.relators();
  for (const auto& c : extra) out.words.push_back(c.word);

  const int n = p.generator_count();
  out.complete = true;
  for (std::size_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> signs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) signs[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : +1;
    int blocker = -1;
    for (std::size_t wi = 0; wi < out.words.size(); ++wi) {
      if (out.words[wi].empty()) continue;
      if (blocks(out.words[wi], signs)) {
        blocker = static_cast<int>(wi);
        break;
      }
    }
    if (blocker >= 0) {
      out.blocker_map.emplace(signs, blocker);
    } else {
      out.complete = false;
      out.unblocked.push_back(signs);
    }
  }
  return out;
}

FindBlockersResult find_blockers(const Presentation& p, int max_generation, std::int64_t max_len,
                                 int max_count) {
  for (int g = 0; g <= max_generation; ++g) {
    std::vector<Consequence> extra;
    if (g > 0) extra = consequences(p, max_len, max_count, g - 1);
    CompletenessResult r = is_complete(p, extra);
    if (r.complete) return FindBlockersResult{true, g, std::move(r)};
  }
  return FindBlockersResult{false, -1, {}};
}

// --- Klein bottle cones -------------------------------------------------------

std::pair<std::int64_t, std::int64_t> klein_normal_pair(const Word& w) {
  std::int64_t m = 0, n = 0;
  for (const auto& s : w.syllables()) {
    if (s.gen == 0) {
      m += s.exp;
      if (s.exp % 2 != 0) n = -n;
    } else {
      n += s.exp;
    }
  }
  return {m, n};
}

bool klein_cone_membership(int s, int t, const Word& w) {
  auto [m, n] = klein_normal_pair(w);
  if (m != 0) return m * s > 0;
  return n * t > 0;
}

Dyadic ordering_metric(const OrderPredicate& p1, const OrderPredicate& p2,
                       const std::vector<Word>& enumeration) {
  for (std::size_t i = 0; i < enumeration.size(); ++i) {
    if (p1(enumeration[i]) != p2(enumeration[i]))
      return Dyadic{false, static_cast<int>(i) + 1};
  }
  return Dyadic{};
}

KPartition restrict_predicate(const Ball& ball, const OrderPredicate& pred) {
  KPartition q;
  for (std::size_t i = 1; i < ball.elements.size(); ++i)
    if (pred(ball.elements[i])) q.members.push_back(static_cast<int>(i));
  return q;
}

bool is_proper_k_partition(const Ball& ball, const KPartition& q) {
  const int n = static_cast<int>(ball.elements.size());
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int e : q.members) {
    if (e <= 0 || e >= n) return false;
    in[static_cast<std::size_t>(e)] = true;
  }
  for (int e = 1; e < n; ++e) {
    bool einv = in[static_cast<std::size_t>(ball.inverse[static_cast<std::size_t>(e)])];
    if (in[static_cast<std::size_t>(e)] && einv) return false;       // Q cap Q^{-1} empty
    if (!in[static_cast<std::size_t>(e)] && !einv) return false;     // Q cup Q^{-1} covers
  }
  for (int g : q.members)
    for (int h : q.members) {
      int prod = ball.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
      if (prod == 0) return false;
      if (prod > 0 && !in[static_cast<std::size_t>(prod)]) return false;
    }
  return true;
}

}  // namespace ordalib
