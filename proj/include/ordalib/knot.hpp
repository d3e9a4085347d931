// Knot-theoretic orderability verdicts from exact Alexander polynomial root
// analysis, plus Wirtinger and two-bridge presentations.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordalib/braid.hpp"
#include "ordalib/poly.hpp"
#include "ordalib/presentation.hpp"

namespace ordalib {

IntPolynomial torus_alexander(int p, int q);
bool alexander_sanity(const IntPolynomial& p);

struct KnotInput {
  std::string name;
  std::optional<BraidWord> braid;
  std::optional<IntPolynomial> polynomial;
  std::optional<bool> fibred;
  std::optional<std::pair<int, int>> two_bridge;  // coprime odd, 0 < p < q
  std::optional<int> twist_m;

  void validate() const;
  IntPolynomial resolve_polynomial() const;  // from polynomial or braid
};

struct Verdict {
  enum Value { BiOrderable, NotBiOrderable, Inconclusive } value = Inconclusive;
  std::string rule;     // which criterion fired
  int roots_with_multiplicity = -1;
  int roots_distinct = -1;

  std::string str() const;
};

Verdict verdict_fibred(const KnotInput& k);
Verdict verdict_two_bridge(const KnotInput& k);
Verdict verdict_twist(int m);

// Best applicable rule for the input (twist, then fibred, then two-bridge).
Verdict verdict_auto(const KnotInput& k);

Presentation two_bridge_presentation(int p, int q);

struct Crossing {
  std::string over;
  std::string in;
  std::string out;
  int sign = +1;
};

Presentation wirtinger(const std::vector<Crossing>& crossings);

}  // namespace ordalib
