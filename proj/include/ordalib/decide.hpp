// Orderability decision procedures: proper k-partitions and their Conradian
// refinement, the semigroup sign test with machine-checkable certificates,
// complete presentations, and the Klein-bottle cone checks.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ordalib/oracle.hpp"
#include "ordalib/presentation.hpp"

namespace ordalib {

struct KPartition {
  std::vector<int> members;  // sorted ball element indices

  bool contains(int e) const;
  friend bool operator==(const KPartition& a, const KPartition& b) { return a.members == b.members; }
  friend bool operator<(const KPartition& a, const KPartition& b) { return a.members < b.members; }
};

// All proper k-partitions of the ball, in deterministic order.
std::vector<KPartition> enumerate_k_partitions(const Ball& ball);

// Conradian variant: also closed under g^{-1} h g^2 whenever that element
// lies in the ball.  Needs the oracle to locate the test products.
std::vector<KPartition> enumerate_conradian_k_partitions(const Oracle& oracle, const Ball& ball);

// A pair g, h in Q with g^{-1} h g^2 in the ball but outside Q, if any.
std::optional<std::pair<int, int>> conradian_violation(const Oracle& oracle, const Ball& ball,
                                                       const KPartition& q);

enum class NonLOStatus { NonLeftOrderable, Undetermined };

NonLOStatus nonlo_by_partitions(const Oracle& oracle, int k, std::int64_t max_elements = 20000);

// --- semigroup sign test -----------------------------------------------------

struct NonLOCase {
  std::vector<int> signs;                        // one per word in X
  std::vector<int> witness;                      // indices into X
  std::optional<RewriteCertificate> certificate; // for bounded-rewriting backends
};

struct SemigroupSignResult {
  bool refuted = false;
  std::vector<NonLOCase> cases;  // one per sign assignment when refuted
};

// Refuted iff for every sign assignment the bounded semigroup closure of
// {x_i^{eps_i}} contains the identity; hints shortcut the search.
SemigroupSignResult semigroup_sign_test(const Oracle& oracle, const std::vector<Word>& X,
                                        int max_product_len,
                                        const std::vector<RefutationHint>& hints = {},
                                        const Presentation* hint_presentation = nullptr);

bool replay_nonlo_case(const Oracle& oracle, const std::vector<Word>& X, const NonLOCase& c,
                       const Presentation* hint_presentation = nullptr);

// --- complete presentations --------------------------------------------------

bool blocks(const Word& relator, const std::vector<int>& signs);

struct CompletenessResult {
  bool complete = false;
  std::vector<Word> words;                     // candidate blockers, in order
  std::map<std::vector<int>, int> blocker_map; // sign assignment -> word index
  std::vector<std::vector<int>> unblocked;     // nonempty iff !complete
};

CompletenessResult is_complete(const Presentation& p, const std::vector<Consequence>& extra = {});

struct FindBlockersResult {
  bool complete = false;
  int generation = -1;  // generations of consequences consumed
  CompletenessResult detail;
};

FindBlockersResult find_blockers(const Presentation& p, int max_generation = 3,
                                 std::int64_t max_len = 12, int max_count = 5000);

// --- Klein bottle cones and the space-of-orderings metric --------------------

std::pair<std::int64_t, std::int64_t> klein_normal_pair(const Word& w);

// Lexicographic cone from the x-sign s and y-sign t: x^m y^n is positive iff
// m s > 0, or m = 0 and n t > 0.
bool klein_cone_membership(int s, int t, const Word& w);

using OrderPredicate = std::function<bool(const Word&)>;

struct Dyadic {
  bool zero = true;
  int exponent = 0;  // value 2^{-exponent} when !zero

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.zero == b.zero && (a.zero || a.exponent == b.exponent);
  }
  bool leq(const Dyadic& o) const {
    if (zero) return true;
    if (o.zero) return false;
    return exponent >= o.exponent;
  }
};

Dyadic ordering_metric(const OrderPredicate& p1, const OrderPredicate& p2,
                       const std::vector<Word>& enumeration);

KPartition restrict_predicate(const Ball& ball, const OrderPredicate& pred);

bool is_proper_k_partition(const Ball& ball, const KPartition& q);

}  // namespace ordalib
