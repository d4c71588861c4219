#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "g2t/lie_algebra.hpp"
#include "fixtures.hpp"

using namespace g2t;

namespace {

bool is_unit_vec(const std::vector<Rational>& v, int k) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (static_cast<int>(i) + 1 == k) {
      if (v[i] != Rational(1)) return false;
    } else if (!v[i].is_zero()) {
      return false;
    }
  }
  return true;
}

bool all_zero(const std::vector<Rational>& v) {
  for (const Rational& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// dim-3 table violating Jacobi: [e1,e2]=e2, [e1,e3]=e3, [e2,e3]=e1.
LieAlgebra broken3() {
  LieAlgebra::BracketMap bm;
  bm[{1, 2}] = {Rational(0), Rational(1), Rational(0)};
  bm[{1, 3}] = {Rational(0), Rational(0), Rational(1)};
  bm[{2, 3}] = {Rational(1), Rational(0), Rational(0)};
  return LieAlgebra::from_brackets(3, bm);
}

}  // namespace

TEST_CASE("bracket tables produce the frozen covector differentials") {
  SUBCASE("three-step nilpotent") {
    LieAlgebra g = fx::nil7_closed();
    CHECK(to_string(g.covector_differential(3)) == "e17");
    CHECK(to_string(g.covector_differential(4)) == "e15 + e27");
    CHECK(to_string(g.covector_differential(6)) == "e13");
    for (int k : {1, 2, 5, 7}) CHECK(g.covector_differential(k).is_zero());
    CHECK(g.jacobi_ok());
  }
  SUBCASE("two-step nilpotent") {
    LieAlgebra g = fx::nil7_heis();
    CHECK(to_string(g.covector_differential(6)) == "e25");
    CHECK(to_string(g.covector_differential(7)) == "-e45");
    for (int k : {1, 2, 3, 4, 5}) CHECK(g.covector_differential(k).is_zero());
    CHECK(g.jacobi_ok());
  }
  SUBCASE("solvable") {
    LieAlgebra g = fx::solv7();
    CHECK(to_string(g.covector_differential(1)) == "e35 + e46");
    CHECK(to_string(g.covector_differential(3)) == "e67");
    CHECK(to_string(g.covector_differential(4)) == "e57");
    CHECK(to_string(g.covector_differential(5)) == "e47");
    CHECK(to_string(g.covector_differential(6)) == "e37");
    CHECK(g.covector_differential(2).is_zero());
    CHECK(g.covector_differential(7).is_zero());
    CHECK(g.jacobi_ok());
    // differentials-in, brackets-out
    CHECK(g.bracket(3, 5) ==
          fx::coords7({{1, -1}}));
    CHECK(g.bracket(6, 7) == fx::coords7({{3, -1}}));
    CHECK(g.bracket(7, 6) == fx::coords7({{3, 1}}));  // antisymmetry
  }
  CHECK_THROWS_AS(fx::nil7_closed().covector_differential(8),
                  std::invalid_argument);
  CHECK_THROWS_AS(fx::nil7_closed().covector_differential(0),
                  std::invalid_argument);
}

TEST_CASE("d squares to zero exactly when Jacobi holds") {
  std::mt19937 rng(41);
  for (const LieAlgebra& g :
       {fx::nil7_closed(), fx::nil7_heis(), fx::solv7(), LieAlgebra::abelian(7)}) {
    REQUIRE(g.jacobi_ok());
    CHECK(jacobi_check(g).pass);
    for (int k = 1; k <= 7; ++k)
      CHECK(g.ce_differential(g.covector_differential(k)).is_zero());
    for (int trial = 0; trial < 10; ++trial) {
      Form a = fx::random_mixed_form(rng, 7, 4);
      CHECK(g.ce_differential(g.ce_differential(a)).is_zero());
    }
  }

  LieAlgebra b = broken3();
  CHECK_FALSE(b.jacobi_ok());
  JacobiReport jr = jacobi_check(b);
  CHECK_FALSE(jr.pass);
  CHECK(jr.i == 1);
  CHECK(jr.j == 2);
  CHECK(jr.k == 3);
  CHECK(jr.residual ==
        std::vector<Rational>{Rational(2), Rational(0), Rational(0)});
  // the broken table is still usable, with d^2 != 0 as the witness
  Form dde1 = b.ce_differential(b.covector_differential(1));
  CHECK(to_string(dde1) == "2 e123");
}

TEST_CASE("ce differential is an odd derivation extending the table") {
  std::mt19937 rng(43);
  LieAlgebra g = fx::solv7();
  for (int trial = 0; trial < 30; ++trial) {
    int j = trial % 4;
    Form a = fx::random_form(rng, 7, j, 3);
    Form c = fx::random_mixed_form(rng, 7, 3);
    Rational sgn = (j % 2 == 0) ? Rational(1) : Rational(-1);
    CHECK(g.ce_differential(wedge(a, c)) ==
          wedge(g.ce_differential(a), c) + sgn * wedge(a, g.ce_differential(c)));
    CHECK(g.ce_differential(a + c) ==
          g.ce_differential(a) + g.ce_differential(c));
  }
  CHECK(g.ce_differential(Form::constant(7, Rational(5))).is_zero());
}

TEST_CASE("center and unimodularity") {
  auto z1 = center(fx::nil7_closed());
  REQUIRE(z1.size() == 2);
  CHECK(is_unit_vec(z1[0], 4));
  CHECK(is_unit_vec(z1[1], 6));

  auto z2 = center(fx::nil7_heis());
  REQUIRE(z2.size() == 4);
  CHECK(is_unit_vec(z2[0], 1));
  CHECK(is_unit_vec(z2[1], 3));
  CHECK(is_unit_vec(z2[2], 6));
  CHECK(is_unit_vec(z2[3], 7));

  auto z3 = center(fx::solv7());
  REQUIRE(z3.size() == 2);
  CHECK(is_unit_vec(z3[0], 1));
  CHECK(is_unit_vec(z3[1], 2));

  for (const LieAlgebra& g : {fx::nil7_closed(), fx::nil7_heis(), fx::solv7()})
    CHECK(all_zero(g.ad_traces()));
}

TEST_CASE("span ideals: membership, ideal and central tests") {
  SpanIdeal a = SpanIdeal::of({6, 3, 4});
  CHECK(a.indices == std::vector<int>{3, 4, 6});
  CHECK(a.dim() == 3);
  CHECK(a.contains(4));
  CHECK_FALSE(a.contains(5));
  CHECK_THROWS_AS(SpanIdeal::of({2, 2}), std::invalid_argument);

  LieAlgebra g = fx::nil7_closed();
  CHECK(is_ideal(g, SpanIdeal::of({6})));
  CHECK(is_central(g, SpanIdeal::of({6})));
  CHECK(is_ideal(g, SpanIdeal::of({3, 4, 6})));
  CHECK_FALSE(is_central(g, SpanIdeal::of({3, 4, 6})));  // [e1,e3] != 0
  CHECK_FALSE(is_ideal(g, SpanIdeal::of({1})));
  CHECK(is_central(fx::solv7(), SpanIdeal::of({1, 2})));
}

TEST_CASE("quotient: compact labels, index maps, verbatim lift") {
  LieAlgebra g = fx::nil7_closed();
  QuotientResult q = quotient(g, SpanIdeal::of({6}));
  CHECK(q.algebra.dim() == 6);
  CHECK(q.to_old == std::vector<int>{1, 2, 3, 4, 5, 7});
  CHECK(q.from_old == std::vector<int>{1, 2, 3, 4, 5, 0, 6});
  CHECK(to_string(q.algebra.covector_differential(3)) == "e16");
  CHECK(to_string(q.algebra.covector_differential(4)) == "e15 + e26");
  for (int k : {1, 2, 5, 6}) CHECK(q.algebra.covector_differential(k).is_zero());
  // on ambient labels the retained differentials read unchanged
  CHECK(lift_from_quotient(q, q.algebra.covector_differential(3), 7) ==
        fx::f7("e17"));
  CHECK(lift_from_quotient(q, q.algebra.covector_differential(4), 7) ==
        fx::f7("e15 + e27"));
  CHECK(restrict_to_quotient(q, fx::f7("e157")) == parse_form("e156", 6));
  CHECK_THROWS_AS(restrict_to_quotient(q, fx::f7("e16")),
                  std::invalid_argument);
  CHECK_THROWS_AS(quotient(g, SpanIdeal::of({1})), std::invalid_argument);
}

TEST_CASE("central extension: append, differentials, round trip") {
  LieAlgebra g = fx::nil7_closed();
  QuotientResult q = quotient(g, SpanIdeal::of({6}));
  Form psi = parse_form("e14 + e23", 6);
  LieAlgebra ext = central_extension(q.algebra, {psi});
  CHECK(ext.dim() == 7);
  CHECK(to_string(ext.covector_differential(7)) == "e14 + e23");
  CHECK(to_string(ext.covector_differential(3)) == "e16");
  CHECK(ext.jacobi_ok());
  CHECK(is_central(ext, SpanIdeal::of({7})));

  QuotientResult back = quotient(ext, SpanIdeal::of({7}));
  CHECK(back.algebra == q.algebra);

  // a non-closed 2-form is not extension data
  Form bad = parse_form("e34", 6);
  REQUIRE_FALSE(q.algebra.ce_differential(bad).is_zero());
  CHECK_THROWS_AS(central_extension(q.algebra, {bad}), std::invalid_argument);
  CHECK_THROWS_AS(central_extension(q.algebra, {parse_form("e1", 6)}),
                  std::invalid_argument);
}

TEST_CASE("reindex permutes basis slots with matching differentials") {
  LieAlgebra g = fx::nil7_heis();
  std::vector<int> swap67{1, 2, 3, 4, 5, 7, 6};
  LieAlgebra h = reindex(g, swap67);
  CHECK(to_string(h.covector_differential(7)) == "e25");
  CHECK(to_string(h.covector_differential(6)) == "-e45");
  CHECK(reindex(h, swap67) == g);
  CHECK(h.jacobi_ok());
}

TEST_CASE("change of basis rescales structure constants") {
  LieAlgebra g = fx::nil7_closed();
  RationalMatrix M = RationalMatrix::identity(7);
  M.at(0, 0) = Rational(2);  // ehat_1 = 2 e1
  LieAlgebra h = change_basis(g, M);
  CHECK(to_string(h.covector_differential(3)) == "2 e17");
  CHECK(to_string(h.covector_differential(4)) == "2 e15 + e27");
  CHECK(to_string(h.covector_differential(6)) == "2 e13");
  CHECK(h.jacobi_ok());
  CHECK(change_basis(g, RationalMatrix::identity(7)) == g);

  RationalMatrix singular(7, 7);
  CHECK_THROWS_AS(change_basis(g, singular), std::invalid_argument);
}

TEST_CASE("derivations and almost-abelian extensions") {
  // 6-dim base with d x1 = x35 + x46
  std::vector<Form> d(6, Form::zero(6));
  d[0] = parse_form("e35 + e46", 6);
  LieAlgebra h = LieAlgebra::from_differentials(6, d);

  // D e_{3+i} = e_{6-i}: swaps 3<->6 and 4<->5
  RationalMatrix D(6, 6);
  D.at(5, 2) = Rational(1);
  D.at(4, 3) = Rational(1);
  D.at(3, 4) = Rational(1);
  D.at(2, 5) = Rational(1);
  CHECK(is_derivation(h, D));
  LieAlgebra ext = extension_by_derivation(h, D);
  CHECK(ext.dim() == 7);
  CHECK(ext == fx::solv7());

  RationalMatrix bad(6, 6);
  bad.at(0, 0) = Rational(1);  // scales only the derived direction e1
  CHECK_FALSE(is_derivation(h, bad));
  CHECK_THROWS_AS(extension_by_derivation(h, bad), std::invalid_argument);
}

TEST_CASE("basic forms and the fiber decomposition") {
  LieAlgebra g = fx::nil7_closed();
  SpanIdeal a = SpanIdeal::of({6});
  CHECK(is_basic(g, a, fx::f7("e135")));
  CHECK(is_basic(g, a, fx::f7("e57")));
  CHECK_FALSE(is_basic(g, a, fx::f7("e16")));

  // contraction-after-differential can fail alone
  LieAlgebra n = fx::nil7_heis();
  CHECK_FALSE(is_basic(n, SpanIdeal::of({2}), fx::f7("e46")));
  CHECK(is_basic(n, SpanIdeal::of({2}), fx::f7("e13")));

  BasicDecomposition bd =
      basic_decomposition(g, a, fx::f7("e146 + e236 + e135"));
  REQUIRE(bd.psis.size() == 1);
  CHECK(to_string(bd.psis[0]) == "e14 + e23");
  CHECK(to_string(bd.fiber_part) == "e146 + e236");
  CHECK(to_string(bd.delta) == "e135");
  CHECK(bd.fiber_part + bd.delta == fx::f7("e146 + e236 + e135"));

  BasicDecomposition whole = basic_decomposition(g, a, fx::f7("e567"));
  CHECK(to_string(whole.psis[0]) == "-e57");
  CHECK(whole.delta.is_zero());

  // two legs on the fiber is rejected, as is a non-central span
  CHECK_THROWS_AS(
      basic_decomposition(fx::solv7(), SpanIdeal::of({1, 2}), fx::f7("e127")),
      std::invalid_argument);
  CHECK_THROWS_AS(basic_decomposition(n, SpanIdeal::of({2}), fx::f7("e135")),
                  std::invalid_argument);
}
