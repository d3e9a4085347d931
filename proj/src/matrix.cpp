#include "ordalib/matrix.hpp"

#include <algorithm>

#include "ordalib/error.hpp"

namespace ordalib {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(Err::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  return out;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) fail(Err::DimensionMismatch, "determinant of non-square matrix");
  int n = rows_;
  IntMatrix w = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (w.at(r, k) != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

struct Worker {
  IntMatrix a, u, v;

  void swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(r1, c), a.at(r2, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(r1, c), u.at(r2, c));
  }
  void swap_cols(int c1, int c2) {
    if (c1 == c2) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, c1), a.at(r, c2));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, c1), v.at(r, c2));
  }
  void add_row(int dst, int src, const Int& f) {  // row dst += f * row src
    for (int c = 0; c < a.cols(); ++c) a.at(dst, c) += f * a.at(src, c);
    for (int c = 0; c < u.cols(); ++c) u.at(dst, c) += f * u.at(src, c);
  }
  void add_col(int dst, int src, const Int& f) {
    for (int r = 0; r < a.rows(); ++r) a.at(r, dst) += f * a.at(r, src);
    for (int r = 0; r < v.rows(); ++r) v.at(r, dst) += f * v.at(r, src);
  }
  void negate_row(int r) {
    for (int c = 0; c < a.cols(); ++c) a.at(r, c) = -a.at(r, c);
    for (int c = 0; c < u.cols(); ++c) u.at(r, c) = -u.at(r, c);
  }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  Worker w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const int n = std::min(m.rows(), m.cols());

  for (int s = 0; s < n; ++s) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing submatrix, rows scanned first.
      int pr = -1, pc = -1;
      Int best = 0;
      for (int r = s; r < w.a.rows(); ++r)
        for (int c = s; c < w.a.cols(); ++c) {
          const Int& x = w.a.at(r, c);
          if (x == 0) continue;
          if (pr < 0 || abs_int(x) < best) {
            best = abs_int(x);
            pr = r;
            pc = c;
          }
        }
      if (pr < 0) {
        pr = -2;  // submatrix is zero
        break;
      }
      w.swap_rows(s, pr);
      w.swap_cols(s, pc);

      bool clean = true;
      for (int r = s + 1; r < w.a.rows(); ++r) {
        if (w.a.at(r, s) == 0) continue;
        Int q = w.a.at(r, s) / w.a.at(s, s);
        if (q != 0) w.add_row(r, s, -q);
        if (w.a.at(r, s) != 0) clean = false;
      }
      for (int c = s + 1; c < w.a.cols(); ++c) {
        if (w.a.at(s, c) == 0) continue;
        Int q = w.a.at(s, c) / w.a.at(s, s);
        if (q != 0) w.add_col(c, s, -q);
        if (w.a.at(s, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: d_s must divide the rest of the submatrix.
      int br = -1, bc = -1;
      for (int r = s + 1; r < w.a.rows() && br < 0; ++r)
        for (int c = s + 1; c < w.a.cols(); ++c)
          if (w.a.at(r, c) % w.a.at(s, s) != 0) {
            br = r;
            bc = c;
            break;
          }
      if (br < 0) break;
      w.add_col(s, bc, 1);
    }
    if (w.a.at(s, s) < 0) w.negate_row(s);
  }

  SmithNormalForm out;
  out.diagonal.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) out.diagonal.push_back(w.a.at(s, s));
  out.left = std::move(w.u);
  out.right = std::move(w.v);
  return out;
}

}  // namespace ordalib
