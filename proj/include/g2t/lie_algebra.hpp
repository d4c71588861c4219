#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "g2t/form.hpp"
#include "g2t/linear_solver.hpp"

namespace g2t {

/// Finite-dimensional real Lie algebra over a fixed basis e_1..e_n, held as
/// structure constants together with the Chevalley-Eilenberg differentials of
/// the dual basis. Sign convention: d alpha(x, y) = -alpha([x, y]), so
/// [e_i, e_j] = sum_k c^k_ij e_k gives d e^k = -sum_{i<j} c^k_ij e^ij.
/// The two presentations are interconvertible and both constructors exist.
/// Jacobi is checked eagerly; a failing table stays usable (the differential
/// then has d^2 != 0) and is flagged.
class LieAlgebra {
 public:
  using BracketMap = std::map<std::pair<int, int>, std::vector<Rational>>;

  /// The 0-dimensional algebra (placeholder for containers).
  LieAlgebra() = default;

  static LieAlgebra abelian(int dim);
  /// brackets holds [e_i, e_j] for i < j as coordinate vectors; missing
  /// pairs are zero.
  static LieAlgebra from_brackets(int dim, const BracketMap& brackets);
  /// differentials[k-1] = d e^k, each a 2-form (may be zero).
  static LieAlgebra from_differentials(int dim,
                                       const std::vector<Form>& differentials);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] bool jacobi_ok() const { return jacobi_ok_; }

  /// [e_i, e_j] for any i, j (antisymmetry applied).
  [[nodiscard]] std::vector<Rational> bracket(int i, int j) const;
  [[nodiscard]] std::vector<Rational> bracket(
      const std::vector<Rational>& v, int j) const;
  [[nodiscard]] const Form& covector_differential(int k) const;

  /// Chevalley-Eilenberg differential extended to arbitrary forms as an odd
  /// derivation.
  [[nodiscard]] Form ce_differential(const Form& a) const;

  /// tr(ad_{e_i}) for each i; all zero iff the algebra is unimodular.
  [[nodiscard]] std::vector<Rational> ad_traces() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.dcov_ == b.dcov_;
  }
  friend bool operator!=(const LieAlgebra& a, const LieAlgebra& b) {
    return !(a == b);
  }

 private:
  void rebuild_jacobi_flag();

  int dim_ = 0;
  BracketMap brackets_;        // keys i < j only, vectors of length dim_
  std::vector<Form> dcov_;     // dcov_[k-1] = d e^k
  bool jacobi_ok_ = true;
};

/// pass, or the lexicographically first triple i < j < k whose Jacobiator
/// [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] is nonzero, with that residual.
struct JacobiReport {
  bool pass = true;
  int i = 0, j = 0, k = 0;
  std::vector<Rational> residual;
};

JacobiReport jacobi_check(const LieAlgebra& g);

/// Basis of the center { x : [x, g] = 0 } as coordinate vectors
/// (deterministic kernel basis of the stacked adjoint maps).
std::vector<std::vector<Rational>> center(const LieAlgebra& g);

/// Subspace spanned by a set of basis vectors, given by their sorted,
/// distinct 1-based indices.
struct SpanIdeal {
  std::vector<int> indices;

  static SpanIdeal of(std::vector<int> idx);
  [[nodiscard]] bool contains(int i) const;
  [[nodiscard]] int dim() const { return static_cast<int>(indices.size()); }
};

bool is_ideal(const LieAlgebra& g, const SpanIdeal& a);
bool is_central(const LieAlgebra& g, const SpanIdeal& a);

/// Quotient by a basis-span ideal. The quotient basis is the retained basis
/// vectors in their original order; to_old maps new 1-based indices to the
/// original ones.
struct QuotientResult {
  LieAlgebra algebra;
  std::vector<int> to_old;    // size algebra.dim()
  std::vector<int> from_old;  // size g.dim(); 0 where killed
};

QuotientResult quotient(const LieAlgebra& g, const SpanIdeal& a);

/// Pushes a basic form on g down to the quotient (throws if it touches a
/// killed index) / lifts a quotient form back.
Form restrict_to_quotient(const QuotientResult& q, const Form& on_g);
Form lift_from_quotient(const QuotientResult& q, const Form& on_n, int g_dim);

/// Central extension of n by closed 2-forms psi_k: the new algebra has
/// generators z_1..z_m appended after n's basis, with d z~^k = psi_k and
/// everything else unchanged. Throws if some psi_k is not a closed 2-form.
LieAlgebra central_extension(const LieAlgebra& n,
                             const std::vector<Form>& psis);

/// Moves basis vector at position i to position perm[i-1] (1-based
/// bijection).
LieAlgebra reindex(const LieAlgebra& g, const std::vector<int>& perm);

/// New basis ehat_j = sum_i M(i,j) e_i; M must be invertible.
LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& M);

/// Leibniz check D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
bool is_derivation(const LieAlgebra& h, const RationalMatrix& D);

/// Almost-abelian style extension h + R e_{n+1} with [e_{n+1}, v] = D v.
/// Throws unless D is a derivation of h.
LieAlgebra extension_by_derivation(const LieAlgebra& h,
                                   const RationalMatrix& D);

/// A form is basic for the ideal a when both iota_x beta and iota_x d beta
/// vanish for every basis vector x of a.
bool is_basic(const LieAlgebra& g, const SpanIdeal& a, const Form& beta);

/// H = sum_k alpha^k wedge psi_k + delta for a central basis-span fiber:
/// psi_k = iota_{x_k} H, fiber_part = sum alpha^k wedge psi_k, delta basic.
/// Throws when H has a component on Lambda^2 a^* (two fiber indices in one
/// blade) or when delta fails the basic test.
struct BasicDecomposition {
  std::vector<Form> psis;
  Form fiber_part = Form::zero(1);
  Form delta = Form::zero(1);
};

BasicDecomposition basic_decomposition(const LieAlgebra& g,
                                       const SpanIdeal& a, const Form& H);

}  // namespace g2t
