#pragma once

#include <optional>
#include <vector>

#include "g2t/g2.hpp"
#include "g2t/lie_algebra.hpp"

namespace g2t {

/// d_H sigma = d sigma + H ^ sigma. H must be a 3-form (or zero); then d_H
/// squares to (dH)^. and is a differential exactly when H is closed.
Form twisted_differential(const LieAlgebra& g, const Form& H,
                          const Form& sigma);

/// lambda with a = lambda * b, when b != 0 and the forms are exactly
/// proportional coefficient-by-coefficient. a = 0 gives lambda = 0.
std::optional<Rational> proportionality_factor(const Form& a, const Form& b);

/// Integrability of the pair (rho, rho_hat) with respect to H:
///   strongly integrable:  d_H rho = d_H rho_hat = 0
///   closed:               d_H rho_hat = 0
///   coclosed:             d_H rho = 0
///   weak (odd type):      d_H rho_hat = lambda rho, lambda != 0
///   weak (even type):     d_H rho = lambda rho_hat, lambda != 0
/// lambda = 0 is reported through closed/coclosed, never as weak.
struct IntegrabilityReport {
  bool h_closed = true;
  Form d_H_rho = Form::zero(7);
  Form d_H_rho_hat = Form::zero(7);
  bool strongly_integrable = false;
  bool closed = false;
  bool coclosed = false;
  std::optional<Rational> weak_odd;
  std::optional<Rational> weak_even;
};

IntegrabilityReport integrability_report(const LieAlgebra& g, const Form& H,
                                         const SpinorPair& pair);

/// Which affine-linear constraints to impose on an unknown 3-form H. The
/// structure equations use the given spinor pair; admissibility means no
/// term of H carries two legs along the fiber span.
struct HConstraints {
  bool h_closed = true;
  bool closed_structure = false;    // d rho_hat + H ^ rho_hat = 0
  bool coclosed_structure = false;  // d rho + H ^ rho = 0
  std::optional<SpanIdeal> admissible_fiber;
};

/// Solution space of an affine system: particular + span(kernel). The
/// unknowns are the grade-3 blade coefficients in canonical blade order.
/// When infeasible, certificate is a row vector y with y*A = 0 but
/// y*b != 0.
struct AffineSolutionSpace {
  bool feasible = false;
  Form particular;
  std::vector<Form> kernel;
  int dimension = 0;
  std::vector<Rational> certificate;

  AffineSolutionSpace() : particular(Form::zero(1)) {}

  /// Membership test: is H in particular + span(kernel)?
  [[nodiscard]] bool contains(const Form& H) const;
};

AffineSolutionSpace solve_h_space(const LieAlgebra& g, const SpinorPair& pair,
                                  const HConstraints& constraints);

/// Evaluates the symmetric trilinear map (a,b,c) -> iota_z a ^ iota_z b ^
/// iota_z c on a basis of the closed 3-forms of g. Since the map is
/// symmetric (the contractions are 2-forms), it vanishes on all unordered
/// basis triples iff (iota_z sigma)^3 = 0 for every closed 3-form sigma.
/// When it does not vanish, a witness sigma with cube != 0 is produced as a
/// small integer combination of the first failing triple.
struct CubicObstructionReport {
  bool vanishes = true;
  int closed_space_dimension = 0;
  std::vector<Form> closed_basis;
  // Populated when vanishes is false:
  int triple_i = 0, triple_j = 0, triple_k = 0;  // 1-based basis positions
  Form witness;
  Form cube;  // (iota_z witness)^3

  CubicObstructionReport() : witness(Form::zero(1)), cube(Form::zero(1)) {}
};

CubicObstructionReport cubic_obstruction(const LieAlgebra& g, int z);

/// Basis of the closed grade-p forms, in canonical blade order of the free
/// coefficients.
std::vector<Form> closed_form_basis(const LieAlgebra& g, int grade);

}  // namespace g2t
