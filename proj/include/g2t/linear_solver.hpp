#pragma once

#include <vector>

#include "g2t/rational.hpp"

namespace g2t {

/// Dense rational matrix, row-major. Sized for the systems that arise here
/// (tens to a few hundred rows); no attempt at sparsity.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), a(r * c) {}

  Rational& at(int r, int c) { return a[r * cols + c]; }
  [[nodiscard]] const Rational& at(int r, int c) const {
    return a[r * cols + c];
  }

  static RationalMatrix identity(int n);

  friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

RationalMatrix multiply(const RationalMatrix& x, const RationalMatrix& y);
std::vector<Rational> multiply(const RationalMatrix& m,
                               const std::vector<Rational>& v);

/// Reduced row echelon form with a record of the row operations.
/// Pivot choice is deterministic: columns left to right, first row with a
/// nonzero entry among the unused ones. ops is invertible with ops * A = R.
struct RrefResult {
  RationalMatrix R;
  RationalMatrix ops;
  std::vector<int> pivot_cols;
  [[nodiscard]] int rank() const {
    return static_cast<int>(pivot_cols.size());
  }
};

RrefResult rref(const RationalMatrix& A);

/// Basis of { x : A x = 0 }, one vector per free column, in ascending free
/// column order (each has a 1 in its free column). Deterministic.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& A);

/// Solves A x = b. When infeasible, certificate is a row vector y with
/// y A = 0 and y b != 0 (extracted from the recorded row operations).
struct AffineSolveResult {
  bool feasible = false;
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> kernel;
  std::vector<Rational> certificate;
};

AffineSolveResult solve_affine(const RationalMatrix& A,
                               const std::vector<Rational>& b);

/// Inverse of a square matrix; throws std::invalid_argument when singular.
RationalMatrix inverse(const RationalMatrix& A);

Rational determinant(const RationalMatrix& A);

}  // namespace g2t
