#include "g2t/g2.hpp"

#include <stdexcept>

namespace g2t {

Form standard_g2_form() {
  Form phi = Form::zero(7);
  phi.add_term(Blade::from_indices({1, 2, 7}), Rational(1));
  phi.add_term(Blade::from_indices({3, 4, 7}), Rational(1));
  phi.add_term(Blade::from_indices({5, 6, 7}), Rational(1));
  phi.add_term(Blade::from_indices({1, 3, 5}), Rational(1));
  phi.add_term(Blade::from_indices({1, 4, 6}), Rational(-1));
  phi.add_term(Blade::from_indices({2, 3, 6}), Rational(-1));
  phi.add_term(Blade::from_indices({2, 4, 5}), Rational(-1));
  return phi;
}

RationalMatrix induced_bilinear(const Form& phi) {
  if (phi.dim() != 7)
    throw std::invalid_argument("induced_bilinear: needs a 7-dim form");
  if (!phi.is_homogeneous(3))
    throw std::invalid_argument("induced_bilinear: needs a 3-form");
  const Blade top = full_blade(7);
  RationalMatrix B(7, 7);
  for (int i = 1; i <= 7; ++i) {
    Form li = interior_product(i, phi);
    for (int j = i; j <= 7; ++j) {
      Form lj = interior_product(j, phi);
      Rational bij = wedge(wedge(li, lj), phi).coefficient(top);
      B.at(i - 1, j - 1) = bij;
      B.at(j - 1, i - 1) = bij;
    }
  }
  return B;
}

bool is_positive_definite(const RationalMatrix& B) {
  if (B.rows != B.cols) return false;
  for (int k = 1; k <= B.rows; ++k) {
    RationalMatrix lead(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) lead.at(r, c) = B.at(r, c);
    if (determinant(lead).sign() <= 0) return false;
  }
  return true;
}

G2Structure G2Structure::adapted(const Form& phi) {
  RationalMatrix B = induced_bilinear(phi);
  if (determinant(B).is_zero())
    throw std::invalid_argument("G2Structure: degenerate 3-form");
  Rational scale = B.at(0, 0);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      const Rational& expect = (i == j) ? scale : Rational(0);
      if (B.at(i, j) != expect)
        throw std::invalid_argument(
            "G2Structure: basis is not adapted (induced bilinear form is "
            "not a multiple of the identity)");
    }
  if (scale.sign() <= 0)
    throw std::invalid_argument(
        "G2Structure: induced bilinear form is not positive");
  G2Structure s;
  s.phi_ = phi;
  s.star_phi_ = hodge_star(phi);
  s.scale_ = scale;
  return s;
}

SU3Data su3_split(const Form& phi, int x) {
  if (phi.dim() != 7)
    throw std::invalid_argument("su3_split: needs a 7-dim form");
  if (x < 1 || x > 7)
    throw std::invalid_argument("su3_split: direction out of range");
  SU3Data d;
  d.direction = x;
  d.alpha = Form::basis(7, {x});
  d.omega = interior_product(x, phi);
  d.psi_plus = phi - wedge(d.alpha, d.omega);
  Form star_phi = hodge_star(phi);
  // star phi = 1/2 omega^2 + psi_minus ^ alpha forces
  // psi_minus = -iota_x(star phi): contracting the identity with x kills
  // the omega^2 part and pulls out -psi_minus.
  d.psi_minus = -interior_product(x, star_phi);
  Form half_omega_sq =
      Rational(1, 2) * wedge(d.omega, d.omega);
  if (half_omega_sq + wedge(d.psi_minus, d.alpha) != star_phi)
    throw std::invalid_argument(
        "su3_split: form is not compatible with the chosen direction "
        "(coassociative reconstruction fails)");
  if (wedge(d.alpha, d.omega) + d.psi_plus != phi)
    throw std::invalid_argument("su3_split: reconstruction failed");
  return d;
}

SU3Data su3_split(const G2Structure& s, int x) { return su3_split(s.phi(), x); }

namespace {

void require_unit_angle(const Rational& s, const Rational& c) {
  if (s * s + c * c != Rational(1))
    throw std::invalid_argument("spinors: need s^2 + c^2 = 1 exactly");
}

}  // namespace

SpinorPair usual_spinors(const G2Structure& s) {
  SpinorPair p;
  p.s = Rational(0);
  p.c = Rational(1);
  p.usual = true;
  p.rho = Form::constant(7, Rational(1)) - s.star_phi();
  p.rho_hat = -s.phi() + Form::monomial(7, full_blade(7), Rational(1));
  return p;
}

SpinorPair generalized_spinors(const G2Structure& s, int direction,
                               const Rational& sin_a, const Rational& cos_a) {
  require_unit_angle(sin_a, cos_a);
  if (direction < 1 || direction > 7)
    throw std::invalid_argument("spinors: direction out of range");
  const Form& phi = s.phi();
  const Form& sphi = s.star_phi();
  Form alpha = Form::basis(7, {direction});
  SpinorPair p;
  p.s = sin_a;
  p.c = cos_a;
  p.usual = sin_a.is_zero() && cos_a == Rational(1);
  p.rho = Form::constant(7, cos_a) - cos_a * sphi +
          sin_a * hodge_star(wedge(alpha, sphi)) -
          sin_a * wedge(alpha, phi) - sin_a * hodge_star(alpha);
  p.rho_hat = sin_a * alpha - cos_a * phi -
              sin_a * hodge_star(wedge(alpha, phi)) -
              sin_a * wedge(alpha, sphi) +
              (cos_a / Rational(7)) * wedge(phi, sphi);
  return p;
}

}  // namespace g2t
