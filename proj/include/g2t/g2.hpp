#pragma once

#include <optional>
#include <vector>

#include "g2t/form.hpp"
#include "g2t/linear_solver.hpp"

namespace g2t {

/// phi = e^127 + e^347 + e^567 + e^135 - e^146 - e^236 - e^245 on R^7.
Form standard_g2_form();

/// The symmetric 7x7 matrix B with B_ij e^{1..7} = iota_i phi ^ iota_j phi
/// ^ phi. For a definite 3-form B is a positive multiple of a Gram matrix;
/// here we only certify positive-definiteness (leading principal minors)
/// and, for adapted frames, that B is a positive multiple of the identity.
RationalMatrix induced_bilinear(const Form& phi);

bool is_positive_definite(const RationalMatrix& B);

/// A 3-form on a 7-dimensional algebra whose induced bilinear form is a
/// positive multiple of the identity, i.e. the frame is adapted /
/// orthonormal for the metric the form induces. The Hodge star is then the
/// combinatorial one.
class G2Structure {
 public:
  static G2Structure adapted(const Form& phi);

  [[nodiscard]] const Form& phi() const { return phi_; }
  [[nodiscard]] const Form& star_phi() const { return star_phi_; }
  /// The factor lambda with induced_bilinear(phi) = lambda * Id.
  [[nodiscard]] const Rational& bilinear_scale() const { return scale_; }

 private:
  Form phi_ = Form::zero(7);
  Form star_phi_ = Form::zero(7);
  Rational scale_;
};

/// SU(3) data induced by a unit direction x (a basis index): alpha = e^x,
/// omega = iota_x phi, psi_plus = phi - alpha ^ omega, psi_minus determined
/// by star phi = 1/2 omega^2 + psi_minus ^ alpha. The reconstruction
/// identities are verified on construction.
struct SU3Data {
  int direction = 0;
  Form alpha = Form::zero(7);
  Form omega = Form::zero(7);
  Form psi_plus = Form::zero(7);
  Form psi_minus = Form::zero(7);
};

SU3Data su3_split(const G2Structure& s, int x);
/// Same split on a bare 3-form; throws when the reconstruction identities
/// fail (the form is not compatible with the chosen direction).
SU3Data su3_split(const Form& phi, int x);

/// The even/odd pair of generalized spinors attached to phi at angle
/// parameters (s, c) = (sin a, cos a), entered exactly (s^2 + c^2 = 1 is
/// required):
///   rho     = c - c*star(phi) + s*star(alpha^star(phi)) - s*(alpha^phi)
///             - s*star(alpha)
///   rho_hat = s*alpha - c*phi - s*star(alpha^phi) - s*(alpha^star(phi))
///             + (c/7)*(phi^star(phi))
/// The usual pair is (s, c) = (0, 1): rho = 1 - star(phi),
/// rho_hat = -phi + vol.
struct SpinorPair {
  Form rho = Form::zero(7);
  Form rho_hat = Form::zero(7);
  Rational s, c;
  bool usual = false;
};

SpinorPair usual_spinors(const G2Structure& s);
SpinorPair generalized_spinors(const G2Structure& s, int direction,
                               const Rational& sin_a, const Rational& cos_a);

}  // namespace g2t
