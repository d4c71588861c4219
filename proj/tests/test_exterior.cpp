#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "g2t/form.hpp"
#include "fixtures.hpp"

using namespace g2t;

namespace {

// Reference sign: count inversions of the concatenated index sequence.
// wedge_sign must agree with this on every disjoint pair.
int inversion_sign(const std::vector<int>& a, const std::vector<int>& b) {
  long inv = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

std::vector<int> mask_indices(uint32_t m) {
  std::vector<int> out;
  for (int i = 0; i < 30; ++i)
    if (m & (1u << i)) out.push_back(i + 1);
  return out;
}

}  // namespace

TEST_CASE("rational scalars canonicalize and order") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational());
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-3).sign() == -1);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
  CHECK(Rational(1, 3) / Rational(1, 6) == Rational(2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK(Rational(-7).str() == "-7");
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("10") == Rational(10));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS((void)(Rational(1) / Rational(0)), std::invalid_argument);
}

TEST_CASE("blades: construction, grade, canonical order") {
  Blade b = Blade::from_indices({3, 1, 5});
  CHECK(b.grade() == 3);
  CHECK(b.indices() == std::vector<int>{1, 3, 5});
  CHECK(b == Blade::from_indices({1, 3, 5}));
  CHECK_THROWS_AS(Blade::from_indices({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Blade::from_indices({0}), std::invalid_argument);

  std::vector<Blade> g3 = blades_of_grade(7, 3);
  CHECK(g3.size() == 35);
  CHECK(g3.front() == Blade::from_indices({1, 2, 3}));
  CHECK(g3.back() == Blade::from_indices({5, 6, 7}));
  // canonical order refines grade with earliest-index-first comparison
  BladeCanonicalLess less;
  CHECK(std::is_sorted(g3.begin(), g3.end(), less));
  CHECK(less(Blade::from_indices({1, 2, 7}), Blade::from_indices({1, 3, 5})));
  CHECK(less(Blade::from_indices({5, 6, 7}), Blade::from_indices({1, 2, 3, 4})));
}

TEST_CASE("wedge sign agrees with the inversion-count oracle") {
  // every disjoint pair of sub-blades of a 6-set, plus overlap = 0
  for (uint32_t a = 0; a < 64; ++a)
    for (uint32_t b = 0; b < 64; ++b) {
      Blade ba{a}, bb{b};
      if (a & b) {
        CHECK(wedge_sign(ba, bb) == 0);
      } else {
        CHECK(wedge_sign(ba, bb) ==
              inversion_sign(mask_indices(a), mask_indices(b)));
      }
    }
}

TEST_CASE("wedge anchors and algebra laws") {
  Form e1 = Form::basis(7, {1});
  Form e2 = Form::basis(7, {2});
  CHECK(to_string(wedge(e1, e2)) == "e12");
  CHECK(to_string(wedge(e2, e1)) == "-e12");
  CHECK(wedge(e1, e1).is_zero());
  CHECK(to_string(wedge(fx::f7("e245"), fx::f7("e136"))) == "-e123456");
  CHECK(to_string(wedge(fx::f7("e145"), fx::f7("e236"))) == "e123456");

  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 50; ++trial) {
    int j = trial % 4, k = (trial / 4) % 4;
    Form a = fx::random_form(rng, 6, j, 3);
    Form b = fx::random_form(rng, 6, k, 3);
    Form c = fx::random_mixed_form(rng, 6, 3);
    // graded commutativity and associativity
    Rational sign = ((j * k) % 2 == 0) ? Rational(1) : Rational(-1);
    CHECK(wedge(a, b) == sign * wedge(b, a));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    // bilinearity
    CHECK(wedge(a + b, c) == wedge(a, c) + wedge(b, c));
  }
}

TEST_CASE("interior product: anchors, nilpotence, derivation law") {
  CHECK(to_string(interior_product(6, fx::f7("e567"))) == "-e57");
  CHECK(to_string(interior_product(6, fx::f7("e146"))) == "e14");
  CHECK(to_string(interior_product(1, fx::f7("e127"))) == "e27");
  CHECK(interior_product(3, fx::f7("e127")).is_zero());

  std::mt19937 rng(64);
  for (int trial = 0; trial < 60; ++trial) {
    Form a = fx::random_form(rng, 7, 1 + trial % 4, 3);
    Form b = fx::random_mixed_form(rng, 7, 3);
    int i = 1 + trial % 7, j = 1 + (trial / 7) % 7;
    CHECK(interior_product(i, interior_product(i, a)).is_zero());
    CHECK(interior_product(i, interior_product(j, a)) ==
          Rational(-1) * interior_product(j, interior_product(i, a)));
    // iota_v(a ^ b) = iota_v a ^ b + (-1)^deg(a) a ^ iota_v b
    int deg = 1 + trial % 4;
    Rational sgn = (deg % 2 == 0) ? Rational(1) : Rational(-1);
    CHECK(interior_product(i, wedge(a, b)) ==
          wedge(interior_product(i, a), b) + sgn * wedge(a, interior_product(i, b)));
  }

  // contraction with a general vector is coordinate-linear
  std::vector<Rational> v(7);
  v[0] = Rational(2);
  v[4] = Rational(-3);
  Form a = fx::f7("e15 + e27");
  CHECK(interior_product(v, a) ==
        Rational(2) * interior_product(1, a) +
            Rational(-3) * interior_product(5, a));
}

TEST_CASE("hodge star: permutation-sign oracle and involution") {
  for (int dim = 1; dim <= 7; ++dim) {
    for (uint32_t m = 0; m < (1u << dim); ++m) {
      Blade b{m};
      Form star = hodge_star(Form::monomial(dim, b, Rational(1)));
      Blade comp = complement(b, dim);
      REQUIRE(star.term_count() == 1);
      CHECK(star.coefficient(comp) == Rational(wedge_sign(b, comp)));
    }
  }
  CHECK(to_string(hodge_star(fx::f7("e127"))) == "e3456");
  CHECK(to_string(hodge_star(Form::constant(7, Rational(1)))) == "e1234567");
  CHECK(to_string(hodge_star(fx::f7("e1234567"))) == "1");

  std::mt19937 rng(7);
  for (int k = 0; k <= 7; ++k) {
    Form a = fx::random_form(rng, 7, k, 4);
    Rational sgn = ((k * (7 - k)) % 2 == 0) ? Rational(1) : Rational(-1);
    CHECK(hodge_star(hodge_star(a)) == sgn * a);
  }
  for (int k = 0; k <= 6; ++k) {
    Form a = fx::random_form(rng, 6, k, 4);
    Rational sgn = ((k * (6 - k)) % 2 == 0) ? Rational(1) : Rational(-1);
    CHECK(hodge_star(hodge_star(a)) == sgn * a);
  }
}

TEST_CASE("exponential of a 2-form") {
  Form F = parse_form("e12 + e34", 6);
  CHECK(to_string(exp_two_form(F)) == "1 + e12 + e34 + e1234");
  CHECK(to_string(exp_two_form(Form::zero(6))) == "1");

  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Form G = fx::random_form(rng, 6, 2, 3);
    CHECK(wedge(exp_two_form(G), exp_two_form(Rational(-1) * G)) ==
          Form::constant(6, Rational(1)));
  }
  CHECK_THROWS_AS(exp_two_form(fx::f7("e123")), std::invalid_argument);
}

TEST_CASE("relabel: permutation signs, missing images, dimension change") {
  // swap 1 <-> 2: e12 picks up the transposition sign
  std::vector<int> swap12{2, 1, 3, 4, 5, 6, 7};
  CHECK(to_string(relabel(fx::f7("e12"), swap12, 7)) == "-e12");
  CHECK(to_string(relabel(fx::f7("e137"), swap12, 7)) == "e237");

  // embed a 6-dim form into 7 letters, sparing slot 6
  std::vector<int> embed{1, 2, 3, 4, 5, 7};
  CHECK(to_string(relabel(parse_form("e56", 6), embed, 7)) == "e57");

  // index with no image must not occur
  std::vector<int> partial{1, 0, 3, 4, 5, 6, 7};
  CHECK_THROWS_WITH_AS(relabel(fx::f7("e12"), partial, 7),
                       doctest::Contains("no image"), std::invalid_argument);
  CHECK(to_string(relabel(fx::f7("e13"), partial, 7)) == "e13");
}

TEST_CASE("printing is canonical; parsing round-trips") {
  CHECK(to_string(Form::zero(7)) == "0");
  CHECK(to_string(Form::constant(7, Rational(-2))) == "-2");
  CHECK(to_string(fx::f7("e12 - e34")) == "e12 - e34");
  CHECK(to_string(fx::f7("-e12 + 2 e34")) == "-e12 + 2 e34");
  CHECK(to_string(fx::f7("1/2 e12")) == "1/2 e12");
  CHECK(to_string(fx::f7("3 - e127")) == "3 - e127");
  CHECK(to_string(parse_form("e{1,10}", 12)) == "e{1,10}");
  CHECK(to_string(parse_form("e{2,3} - e{1,11}", 12)) == "-e{1,11} + e{2,3}");

  std::mt19937 rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    Form a = fx::random_mixed_form(rng, 7, 5);
    CHECK(parse_form(to_string(a), 7) == a);
    Form b = fx::random_mixed_form(rng, 12, 4);
    CHECK(parse_form(to_string(b), 12) == b);
  }
}

TEST_CASE("parse rejects malformed literals") {
  CHECK_THROWS_AS(parse_form("e11", 7), std::invalid_argument);  // not increasing
  CHECK_THROWS_AS(parse_form("e21", 7), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("e18", 7), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(parse_form("e0", 7), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("2/0 e12", 7), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("e12 +", 7), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("", 7), std::invalid_argument);
  // compact digits are ambiguous once two-digit indices exist
  CHECK_THROWS_WITH_AS(parse_form("e127", 12), doctest::Contains("ambiguous"),
                       std::invalid_argument);
  CHECK_NOTHROW(parse_form("e{1,2,7}", 12));
}

TEST_CASE("form accessors and grading") {
  Form a = fx::f7("2 e12 - e34 + e567");
  CHECK(a.term_count() == 3);
  CHECK(a.coefficient(Blade::from_indices({1, 2})) == Rational(2));
  CHECK(a.coefficient(Blade::from_indices({1, 3})) == Rational(0));
  CHECK(a.grades() == std::vector<int>{2, 3});
  CHECK_FALSE(a.is_homogeneous(2));
  CHECK(fx::f7("e12 + e34").is_homogeneous(2));
  CHECK(Form::zero(7).is_homogeneous(2));   // vacuously
  CHECK(to_string(a.graded_part(2)) == "2 e12 - e34");
  CHECK(to_string(a.graded_part(3)) == "e567");
  CHECK(a.graded_part(5).is_zero());
  CHECK_FALSE(a.is_even());
  CHECK_FALSE(a.is_odd());
  CHECK(fx::f7("1 + e12").is_even());
  CHECK(fx::f7("e5 + e127").is_odd());
  CHECK((a - a).is_zero());
  CHECK(a + a == Rational(2) * a);
}
