// Integer Laurent polynomials in one variable t, for the Burau representation.
#pragma once

#include <map>
#include <string>

#include "ordalib/ints.hpp"
#include "ordalib/poly.hpp"

namespace ordalib {

class Laurent {
 public:
  Laurent() = default;
  Laurent(const Int& c, int deg) {
    if (c != 0) c_[deg] = c;
  }
  static Laurent one() { return Laurent(1, 0); }

  bool is_zero() const { return c_.empty(); }
  int low() const { return c_.empty() ? 0 : c_.begin()->first; }
  int high() const { return c_.empty() ? 0 : c_.rbegin()->first; }
  Int coeff(int d) const {
    auto it = c_.find(d);
    return it == c_.end() ? Int(0) : it->second;
  }

  Laurent operator+(const Laurent& r) const {
    Laurent out = *this;
    for (const auto& [d, c] : r.c_) out.add(d, c);
    return out;
  }
  Laurent operator-(const Laurent& r) const {
    Laurent out = *this;
    for (const auto& [d, c] : r.c_) out.add(d, -c);
    return out;
  }
  Laurent operator*(const Laurent& r) const {
    Laurent out;
    for (const auto& [da, ca] : c_)
      for (const auto& [db, cb] : r.c_) out.add(da + db, ca * cb);
    return out;
  }
  bool operator==(const Laurent& r) const { return c_ == r.c_; }

  // As an ordinary polynomial after shifting the lowest degree to zero.
  IntPolynomial shifted_polynomial() const {
    if (is_zero()) return {};
    std::vector<Int> cs(static_cast<std::size_t>(high() - low()) + 1, Int(0));
    for (const auto& [d, c] : c_) cs[static_cast<std::size_t>(d - low())] = c;
    return IntPolynomial(std::move(cs));
  }

 private:
  void add(int d, const Int& c) {
    if (c == 0) return;
    auto it = c_.find(d);
    if (it == c_.end()) {
      c_[d] = c;
    } else {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }
  std::map<int, Int> c_;  // degree -> nonzero coefficient
};

}  // namespace ordalib
