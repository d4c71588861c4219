#include "g2t/linear_solver.hpp"

#include <stdexcept>
#include <utility>

namespace g2t {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RationalMatrix multiply(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.cols != y.rows)
    throw std::invalid_argument("multiply: shape mismatch");
  RationalMatrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (int j = 0; j < y.cols; ++j)
        out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return out;
}

std::vector<Rational> multiply(const RationalMatrix& m,
                               const std::vector<Rational>& v) {
  if (m.cols != static_cast<int>(v.size()))
    throw std::invalid_argument("multiply: vector length mismatch");
  std::vector<Rational> out(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero()) out[i] += m.at(i, j) * v[j];
  return out;
}

RrefResult rref(const RationalMatrix& A) {
  RrefResult res{A, RationalMatrix::identity(A.rows), {}};
  RationalMatrix& R = res.R;
  RationalMatrix& E = res.ops;
  int next_row = 0;
  for (int col = 0; col < A.cols && next_row < A.rows; ++col) {
    int pivot = -1;
    for (int r = next_row; r < A.rows; ++r)
      if (!R.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != next_row) {
      for (int c = 0; c < R.cols; ++c)
        std::swap(R.at(pivot, c), R.at(next_row, c));
      for (int c = 0; c < E.cols; ++c)
        std::swap(E.at(pivot, c), E.at(next_row, c));
    }
    Rational inv = Rational(1) / R.at(next_row, col);
    for (int c = 0; c < R.cols; ++c) R.at(next_row, c) *= inv;
    for (int c = 0; c < E.cols; ++c) E.at(next_row, c) *= inv;
    for (int r = 0; r < A.rows; ++r) {
      if (r == next_row || R.at(r, col).is_zero()) continue;
      Rational f = R.at(r, col);
      for (int c = 0; c < R.cols; ++c) R.at(r, c) -= f * R.at(next_row, c);
      for (int c = 0; c < E.cols; ++c) E.at(r, c) -= f * E.at(next_row, c);
    }
    res.pivot_cols.push_back(col);
    ++next_row;
  }
  return res;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& A) {
  RrefResult r = rref(A);
  std::vector<bool> is_pivot(A.cols, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> out;
  for (int free = 0; free < A.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(A.cols);
    x[free] = Rational(1);
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
      x[r.pivot_cols[p]] = -r.R.at(static_cast<int>(p), free);
    out.push_back(std::move(x));
  }
  return out;
}

AffineSolveResult solve_affine(const RationalMatrix& A,
                               const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != A.rows)
    throw std::invalid_argument("solve_affine: rhs length mismatch");
  RationalMatrix aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  RrefResult r = rref(aug);
  AffineSolveResult out;
  for (std::size_t p = 0; p < r.pivot_cols.size(); ++p) {
    if (r.pivot_cols[p] == A.cols) {
      // Contradictory row 0 = 1; the matching row of ops is the certificate.
      out.feasible = false;
      out.certificate.resize(A.rows);
      for (int j = 0; j < A.rows; ++j)
        out.certificate[j] = r.ops.at(static_cast<int>(p), j);
      return out;
    }
  }
  out.feasible = true;
  out.particular.assign(A.cols, Rational(0));
  for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
    out.particular[r.pivot_cols[p]] = r.R.at(static_cast<int>(p), A.cols);
  out.kernel = kernel_basis(A);
  return out;
}

RationalMatrix inverse(const RationalMatrix& A) {
  if (A.rows != A.cols) throw std::invalid_argument("inverse: not square");
  RrefResult r = rref(A);
  if (r.rank() != A.rows)
    throw std::invalid_argument("inverse: singular matrix");
  return r.ops;
}

Rational determinant(const RationalMatrix& A) {
  if (A.rows != A.cols)
    throw std::invalid_argument("determinant: not square");
  RationalMatrix M = A;
  const int n = M.rows;
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!M.at(r, c).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != c) {
      for (int j = c; j < n; ++j) std::swap(M.at(p, j), M.at(c, j));
      det = -det;
    }
    det = det * M.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (M.at(r, c).is_zero()) continue;
      Rational f = M.at(r, c) / M.at(c, c);
      for (int j = c; j < n; ++j)
        M.at(r, j) = M.at(r, j) - f * M.at(c, j);
    }
  }
  return det;
}

}  // namespace g2t
