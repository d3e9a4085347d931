// Embedding of free groups into truncated integer power series in
// non-commuting variables, and the induced bi-ordering.
#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ordalib/ints.hpp"
#include "ordalib/word.hpp"

namespace ordalib {

// A product of non-commuting variables, one per alphabet generator; ordered
// by total degree, then lexicographically by subscript (= alphabet order).
struct Monomial {
  std::vector<int> vars;

  int degree() const { return static_cast<int>(vars.size()); }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.vars == b.vars; }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
    return a.vars < b.vars;
  }
};

class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(int degree) : degree_(degree) {}
  static TruncatedSeries one(int degree);

  int degree() const { return degree_; }
  const std::map<Monomial, Int>& coeffs() const { return coeffs_; }
  Int coeff(const Monomial& m) const;
  void add(const Monomial& m, const Int& c);

  TruncatedSeries mul(const TruncatedSeries& rhs) const;  // DegreeMismatch if degrees differ

  // Smallest monomial on which *this and rhs differ, with the two coefficients.
  std::optional<std::pair<Monomial, std::pair<Int, Int>>> first_difference(
      const TruncatedSeries& rhs) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

  std::string str(const AlphabetPtr& alpha) const;  // lowest-degree-first rendering

 private:
  int degree_ = 0;
  std::map<Monomial, Int> coeffs_;
};

// mu(w) truncated at total degree d, where mu(x) = 1 + X and
// mu(x^{-1}) = 1 - X + X^2 - ...
TruncatedSeries magnus_expand(const Word& w, int d);

// Total bi-invariant order on the free group: compare expansions at the first
// differing term.  The truncation degree len(u)+len(v)+1 makes the first
// differing term visible; evaluation escalates the degree only as needed.
Cmp magnus_compare(const Word& u, const Word& v);

// The first non-constant term of mu(w) with nonzero coefficient.
std::optional<std::pair<Monomial, Int>> magnus_leading_term(const Word& w);

bool is_garside_positive(const Word& w);

}  // namespace ordalib
