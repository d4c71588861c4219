#pragma once

#include <vector>

#include "g2t/lie_algebra.hpp"

namespace g2t {

/// Evidence for (g, a, H) being an admissible triple: H closed, a an
/// abelian ideal that is moreover central, and H carrying no component
/// with two legs along a (H(x,y,.) = 0 for x, y in a; vacuous when
/// dim a = 1).
struct AdmissibilityChecks {
  bool h_closed = false;
  bool fiber_abelian_ideal = false;
  bool fiber_central = false;
  bool h_fiber_degenerate = false;

  [[nodiscard]] bool all() const {
    return h_closed && fiber_abelian_ideal && fiber_central &&
           h_fiber_degenerate;
  }
};

struct AdmissibleTriple {
  LieAlgebra algebra;
  SpanIdeal fiber;
  Form H;
  AdmissibilityChecks checks;

  AdmissibleTriple() : H(Form::zero(1)) {}
};

/// Runs all four checks; never throws on a failing check (the flags carry
/// the evidence). Throws only on malformed input (wrong dimension, H not a
/// 3-form, fiber index out of range).
AdmissibleTriple validate_admissible(const LieAlgebra& g,
                                     const SpanIdeal& fiber, const Form& H);

/// The dual of an admissible triple with central fiber x_1 < ... < x_m:
///   n       = g / a (compact labels),
///   g-dual  = central extension of n by Psi_k = iota_{x_k} H, with the new
///             central generator z_k placed back at ambient slot x_k, so
///             base covectors keep their labels verbatim;
///   H-dual  = sum_k e^{x_k} ^ (d e^{x_k} computed in g) + delta,
/// where delta is the basic component of H. The result is itself an
/// admissible triple over the same fiber slots and is revalidated.
struct DualResult {
  AdmissibleTriple dual;
  std::vector<Form> psis;     // iota_{x_k} H on the original labels
  Form delta;                 // basic component of H
  std::vector<int> fiber_map; // fiber_map[k-1] = ambient slot of z_k (= x_k)

  DualResult() : delta(Form::zero(1)) {}
};

DualResult dualize(const AdmissibleTriple& t);

/// The correspondence algebra c on dim(g) + m generators: labels 1..dim(g)
/// behave as in g, and the extra generator at dim(g)+k is central with
/// covector differential Psi_k = iota_{x_k} H. Both sides project onto it:
///   p   : forms on g lift with identical labels;
///   p-dual: forms on g-dual lift with base labels fixed and the slot-x_k
///           covector (the dual fiber z~^k) sent to dim(g)+k.
/// F = sum_k gamma^{dim(g)+k} ^ gamma^{x_k}.
struct CorrespondenceSpace {
  LieAlgebra c;
  int base_dim = 0;         // dim(g) = dim(g-dual)
  SpanIdeal fiber;          // x_k, as labels of g and of c
  std::vector<int> dual_fiber;  // c label of z_k = base_dim + k
  Form F;

  CorrespondenceSpace() : F(Form::zero(1)) {}

  [[nodiscard]] Form lift_from_base(const Form& on_g) const;
  [[nodiscard]] Form lift_from_dual(const Form& on_dual) const;
};

CorrespondenceSpace correspondence(const AdmissibleTriple& t,
                                   const DualResult& d);

/// Exact check of the duality relation p*H - p_dual*H_dual = dF on the
/// correspondence space.
struct DualityCertificate {
  Form lhs;
  Form rhs;
  Form residual;
  bool pass = false;

  DualityCertificate()
      : lhs(Form::zero(1)), rhs(Form::zero(1)), residual(Form::zero(1)) {}
};

DualityCertificate verify_duality_certificate(const CorrespondenceSpace& cs,
                                              const Form& H,
                                              const Form& H_dual);

/// Spinor transport tau: lift sigma to c, multiply by e^F, and extract the
/// coefficient of the fiber volume written as a trailing factor:
///   e^F ^ p*sigma = X ^ gamma^{x_1} ^ ... ^ gamma^{x_m} + (terms missing
/// some gamma^{x_k}), with X free of fiber legs; the transport is X pushed
/// to the dual labels. This intertwines the twisted differentials,
/// d_{H-dual} tau(sigma) = tau(d_H sigma), and flips parity exactly when m
/// is odd. Throws if X fails to be fiber-free (convention breakage guard).
Form transport_spinor(const CorrespondenceSpace& cs, const Form& sigma);

/// Dualizes twice and compares with the original triple, entry for entry.
struct DoubleDualReport {
  bool algebra_match = false;
  bool h_match = false;
  bool fiber_match = false;
  bool pass = false;
  Form h_difference;  // H-double-dual minus H

  DoubleDualReport() : h_difference(Form::zero(1)) {}
};

DoubleDualReport double_dual_check(const AdmissibleTriple& t);

}  // namespace g2t
