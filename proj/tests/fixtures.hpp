#pragma once

// Shared 7-dimensional fixtures for the suites. Three algebras, each
// carrying a definite 3-form in an adapted frame:
//   nil7_closed : 3-step nilpotent, the form below is closed;
//   nil7_heis   : 2-step nilpotent (two independent central directions);
//   solv7       : solvable unimodular, the form below is co-closed.
// Frozen tables in the tests were computed once with this library and
// cross-checked by hand where a sign could hide.

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "g2t/form.hpp"
#include "g2t/lie_algebra.hpp"

namespace fx {

inline std::vector<g2t::Rational> coords7(
    std::initializer_list<std::pair<int, int>> terms) {
  std::vector<g2t::Rational> v(7);
  for (auto [k, c] : terms) v[static_cast<std::size_t>(k - 1)] = g2t::Rational(c);
  return v;
}

// [e1,e7] = -e3, [e1,e5] = -e4, [e2,e7] = -e4, [e1,e3] = -e6.
inline g2t::LieAlgebra nil7_closed() {
  g2t::LieAlgebra::BracketMap bm;
  bm[{1, 7}] = coords7({{3, -1}});
  bm[{1, 5}] = coords7({{4, -1}});
  bm[{2, 7}] = coords7({{4, -1}});
  bm[{1, 3}] = coords7({{6, -1}});
  return g2t::LieAlgebra::from_brackets(7, bm);
}

// [e2,e5] = -e6, [e4,e5] = e7.
inline g2t::LieAlgebra nil7_heis() {
  g2t::LieAlgebra::BracketMap bm;
  bm[{2, 5}] = coords7({{6, -1}});
  bm[{4, 5}] = coords7({{7, 1}});
  return g2t::LieAlgebra::from_brackets(7, bm);
}

// d e1 = e35 + e46, d e3 = e67, d e4 = e57, d e5 = e47, d e6 = e37.
inline g2t::LieAlgebra solv7() {
  std::vector<g2t::Form> d(7, g2t::Form::zero(7));
  d[0] = g2t::parse_form("e35 + e46", 7);
  d[2] = g2t::parse_form("e67", 7);
  d[3] = g2t::parse_form("e57", 7);
  d[4] = g2t::parse_form("e47", 7);
  d[5] = g2t::parse_form("e37", 7);
  return g2t::LieAlgebra::from_differentials(7, d);
}

inline g2t::Form f7(const char* literal) { return g2t::parse_form(literal, 7); }

// Adapted definite 3-form on solv7 (differs from the standard one in the
// signs and support of its last four blades).
inline g2t::Form phi_solv7() {
  return f7("e127 + e347 + e567 - e136 - e145 - e235 + e246");
}

// Deterministic small random forms for the property suites.
inline g2t::Form random_form(std::mt19937& rng, int dim, int grade,
                             int terms) {
  std::vector<g2t::Blade> blades = g2t::blades_of_grade(dim, grade);
  std::uniform_int_distribution<std::size_t> pick(0, blades.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  g2t::Form out = g2t::Form::zero(dim);
  for (int t = 0; t < terms; ++t) {
    int c = coeff(rng);
    if (c != 0) out += g2t::Rational(c) * g2t::Form::monomial(dim, blades[pick(rng)], g2t::Rational(1));
  }
  return out;
}

// Mixed-degree random form (sum of homogeneous pieces).
inline g2t::Form random_mixed_form(std::mt19937& rng, int dim, int terms) {
  std::uniform_int_distribution<int> grade(0, dim);
  g2t::Form out = g2t::Form::zero(dim);
  for (int t = 0; t < terms; ++t) out += random_form(rng, dim, grade(rng), 1);
  return out;
}

}  // namespace fx
