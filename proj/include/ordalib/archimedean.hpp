// Archimedean orderings of Z^n by exact quadratic-irrational vectors, and a
// numerical realization of the order-preserving embedding into (R, +).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordalib/ints.hpp"
#include "ordalib/word.hpp"

namespace ordalib {

// Exact element a + b sqrt(d) of Z[sqrt(d)], d squarefree and positive.
struct Quad {
  Int a;
  Int b;
  long long d = 2;

  Quad() : a(0), b(0) {}
  Quad(Int a_, Int b_, long long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {}
  static Quad integer(Int v, long long d_ = 2) { return Quad(std::move(v), 0, d_); }

  Quad operator+(const Quad& o) const;
  Quad operator-(const Quad& o) const;
  Quad operator*(const Quad& o) const;
  Quad scaled(const Int& k) const { return Quad(a * k, b * k, d); }
  int sign() const;  // exact sign of a + b sqrt(d)

  std::string str() const;
};

struct OrderVector {
  std::vector<Quad> primary;
  std::vector<std::vector<Quad>> tiebreaks;  // for rational-slope primaries

  int dimension() const { return static_cast<int>(primary.size()); }
  // Component grammar: "3", "-2", "sqrt2", "-sqrt2", "1+sqrt2", "2*sqrt3"...
  static OrderVector parse(const std::string& text, const std::string& tiebreak_text = "");
};

using ZVec = std::vector<std::int64_t>;

Cmp zn_compare(const OrderVector& v, const ZVec& m, const ZVec& n);

// phi_K(g) = a_{2^K} / 2^K where f^{a_m} <= g^m < f^{a_m + 1}; computed with
// comparisons only, by doubling then bisection over integer multiples of f.
Rat holder_phi(const OrderVector& v, const ZVec& f, const ZVec& g, int K);

}  // namespace ordalib
