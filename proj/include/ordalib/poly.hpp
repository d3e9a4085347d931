// Exact integer polynomial arithmetic and Sturm-chain real root counting.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ordalib/ints.hpp"

namespace ordalib {

// Coefficients lowest degree first; highest coefficient nonzero unless zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> cs);
  explicit IntPolynomial(std::vector<Int> cs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return IntPolynomial({1}); }
  static IntPolynomial monomial(const Int& c, int deg);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(int i) const;
  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  IntPolynomial operator+(const IntPolynomial& r) const;
  IntPolynomial operator-(const IntPolynomial& r) const;
  IntPolynomial operator*(const IntPolynomial& r) const;
  IntPolynomial neg() const;
  IntPolynomial derivative() const;

  // Exact division; fails if the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& r) const;

  // Content-normalized gcd with positive leading coefficient.
  static IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

  IntPolynomial primitive_part() const;        // positive leading coefficient
  IntPolynomial content_normalized() const;    // divides by positive content, keeps sign

  bool operator==(const IntPolynomial& r) const { return coeffs_ == r.coeffs_; }
  std::string str() const;  // e.g. "1 - 3t + t^2"

 private:
  void trim();
  std::vector<Int> coeffs_;
};

// Exact counts of roots in (0, oo): with multiplicity, and distinct.
std::pair<int, int> positive_real_roots(const IntPolynomial& p);

// Number of distinct real roots of squarefree p in the open interval (a, b).
int sturm_count_open(const IntPolynomial& squarefree, const Rat& a, const Rat& b);

}  // namespace ordalib
