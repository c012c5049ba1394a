#include <doctest.h>

#include <algorithm>

#include "ckm/errors.hpp"
#include "ckm/zerodim.hpp"
#include "test_support.hpp"

using namespace ckm;
using testsupport::uniform_int;

namespace {

Ring ring_t() { return Ring({"t"}); }
Ring ring_xy() { return Ring({"x", "y"}); }

Polynomial P(const std::string& s, const Ring& r) { return Polynomial::parse(s, r); }

Ideal ideal_of(const Ring& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& s : gens) ps.push_back(P(s, r));
  return Ideal(r, std::move(ps));
}

}  // namespace

TEST_CASE("buchberger on the pinned examples") {
  auto r = ring_xy();
  auto gb = buchberger(ideal_of(r, {"x-1", "y-2"}));
  REQUIRE(gb.size() == 2);
  CHECK(gb.elements()[0] == P("y-2", r));
  CHECK(gb.elements()[1] == P("x-1", r));

  auto gb2 = buchberger(ideal_of(r, {"x^2", "x"}));
  REQUIRE(gb2.size() == 1);
  CHECK(gb2.elements()[0] == P("x", r));

  auto gb3 = buchberger(ideal_of(r, {"x^2+y^2-1", "x-y"}));
  REQUIRE(gb3.size() == 2);
  CHECK(gb3.elements()[0] == P("x-y", r));
  CHECK(gb3.elements()[1] == P("y^2-1/2", r));
}

TEST_CASE("buchberger certificate on random ideals") {
  for (int trial = 0; trial < 30; ++trial) {
    Ring r = ring_xy();
    std::vector<Polynomial> gens;
    int n = uniform_int(1, 3);
    for (int i = 0; i < n; ++i) {
      gens.push_back(testsupport::random_nonzero_polynomial(r, 3, 3));
    }
    Ideal ideal(r, gens);
    auto gb = buchberger(ideal);

    // Every input generator reduces to zero.
    for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());

    // Every S-polynomial reduces to zero.
    const auto& e = gb.elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        Monomial l = Monomial::lcm(e[i].leading_monomial(), e[j].leading_monomial());
        Polynomial s =
            Polynomial::from_monomial(r, l.quotient(e[i].leading_monomial())) * e[i] -
            Polynomial::from_monomial(r, l.quotient(e[j].leading_monomial())) * e[j];
        CHECK(normal_form(s, gb).is_zero());
      }
    }

    // Reducedness: no term divisible by another leading monomial; monic.
    for (std::size_t i = 0; i < e.size(); ++i) {
      CHECK(e[i].leading_coefficient() == Rational(1));
      for (const auto& [m, coeff] : e[i].terms()) {
        for (std::size_t j = 0; j < e.size(); ++j) {
          if (i == j) continue;
          CHECK_FALSE(e[j].leading_monomial().divides(m));
        }
      }
    }

    // Generator order is irrelevant.
    std::vector<Polynomial> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), testsupport::rng());
    CHECK(buchberger(Ideal(r, shuffled)) == gb);
  }
}

TEST_CASE("normal form examples") {
  auto r = ring_xy();
  auto gb = buchberger(ideal_of(r, {"x^2+y^2-1", "x-y"}));
  CHECK(normal_form(P("x^2", r), gb) == P("1/2", r));
  for (const auto& g : gb.elements()) CHECK(normal_form(g, gb).is_zero());
  CHECK(normal_form(P("3", r), gb) == P("3", r));
  CHECK_THROWS_AS(normal_form(P("t", ring_t()), gb), Error);

  // Linearity and idempotence on random inputs.
  for (int i = 0; i < 40; ++i) {
    Polynomial a = testsupport::random_polynomial(r), b = testsupport::random_polynomial(r);
    Polynomial na = normal_form(a, gb), nb = normal_form(b, gb);
    CHECK(normal_form(a + b, gb) == na + nb);
    CHECK(normal_form(na, gb) == na);
  }
}

TEST_CASE("cofinite dimension") {
  auto r = ring_xy();
  auto gb = buchberger(ideal_of(r, {"x^2+y^2-1", "x-y"}));
  auto dim = cofinite_dimension(gb);
  REQUIRE(dim.has_value());
  CHECK(*dim == 2);
  auto sm = standard_monomials(gb);
  REQUIRE(sm.size() == 2);
  CHECK(sm[0].is_one());
  CHECK(sm[1] == Monomial(std::vector<int>{0, 1}));

  auto box = cofinite_dimension(buchberger(ideal_of(r, {"x^2", "y^3"})));
  REQUIRE(box.has_value());
  CHECK(*box == 6);

  CHECK_FALSE(cofinite_dimension(buchberger(ideal_of(r, {"x"}))).has_value());
  CHECK_THROWS_AS(standard_monomials(buchberger(ideal_of(r, {"x"}))), Error);

  // Unit ideal: zero-dimensional quotient.
  auto unit = buchberger(ideal_of(r, {"x", "x-1"}));
  CHECK(unit.is_unit_ideal());
  CHECK(cofinite_dimension(unit) == 0);
}

TEST_CASE("quotient algebra tables") {
  auto r = ring_t();
  QuotientAlgebra q(buchberger(ideal_of(r, {"t^2-1"})));
  REQUIRE(q.dim() == 2);
  CHECK(q.basis()[0].is_one());
  const QMatrix& m = q.mul_matrix(0);
  CHECK(m.at(0, 0) == Rational(0));
  CHECK(m.at(0, 1) == Rational(1));
  CHECK(m.at(1, 0) == Rational(1));
  CHECK(m.at(1, 1) == Rational(0));

  QuotientAlgebra qn(buchberger(ideal_of(r, {"t^2"})));
  const QMatrix& mn = qn.mul_matrix(0);
  CHECK(mn.at(0, 0) == Rational(0));
  CHECK(mn.at(0, 1) == Rational(0));
  CHECK(mn.at(1, 0) == Rational(1));
  CHECK(mn.at(1, 1) == Rational(0));

  auto rxy = ring_xy();
  QuotientAlgebra q2(buchberger(ideal_of(rxy, {"x", "y^2-1"})));
  REQUIRE(q2.dim() == 2);
  const QMatrix& mx = q2.mul_matrix(0);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(mx.at(i, j).is_zero());

  // Multiplication matrices commute; applying x_i to 1 gives NF(x_i).
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens{
        P("x^2-" + std::to_string(uniform_int(0, 3)), rxy),
        P("y^2-" + std::to_string(uniform_int(0, 3)), rxy)};
    QuotientAlgebra q3(buchberger(Ideal(rxy, gens)));
    CHECK(q3.mul_matrix(0) * q3.mul_matrix(1) == q3.mul_matrix(1) * q3.mul_matrix(0));
    auto one = q3.coords(P("1", rxy));
    for (std::size_t v = 0; v < 2; ++v) {
      auto img = q3.mul_matrix(v).apply(one);
      CHECK(q3.from_coords(img) ==
            normal_form(Polynomial::variable(rxy, v), q3.groebner()));
    }
  }
}

TEST_CASE("minimal polynomials") {
  auto r = ring_t();
  Ring z({"z"});
  QuotientAlgebra q1(buchberger(ideal_of(r, {"t^2-1"})));
  CHECK(minimal_polynomial(q1, 0) == P("z^2-1", z));
  QuotientAlgebra q2(buchberger(ideal_of(r, {"t^2"})));
  CHECK(minimal_polynomial(q2, 0) == P("z^2", z));
  auto rxy = ring_xy();
  QuotientAlgebra q3(buchberger(ideal_of(rxy, {"x^2+y^2-1", "x-y"})));
  CHECK(minimal_polynomial(q3, 0) == P("z^2-1/2", z));
  // The image of y generates the same subalgebra here.
  CHECK(minimal_polynomial(q3, 1) == P("z^2-1/2", z));
}

TEST_CASE("ideal products") {
  auto r = ring_t();
  auto prod = ideal_product(ideal_of(r, {"t-1"}), ideal_of(r, {"t+1"}));
  auto gb = buchberger(prod);
  REQUIRE(gb.size() == 1);
  CHECK(gb.elements()[0] == P("t^2-1", r));
  CHECK(cofinite_dimension(gb) == 2);

  auto rxy = ring_xy();
  auto mm = ideal_product(ideal_of(rxy, {"x", "y"}), ideal_of(rxy, {"x", "y"}));
  CHECK(mm.generators().size() == 3);
  auto gb2 = buchberger(mm);
  CHECK(cofinite_dimension(gb2) == 3);
  auto sm = standard_monomials(gb2);
  REQUIRE(sm.size() == 3);
  CHECK(sm[0].is_one());

  // Unit ideal is the identity for products.
  auto i1 = ideal_of(rxy, {"x^2-1", "x*y"});
  auto with_unit = buchberger(ideal_product(i1, ideal_of(rxy, {"1"})));
  CHECK(with_unit == buchberger(i1));

  CHECK_THROWS_AS(ideal_product(ideal_of(r, {"t"}), ideal_of(rxy, {"x"})), Error);
}

TEST_CASE("radical of zero-dimensional ideals") {
  auto r = ring_t();
  auto rad = radical_zero_dim(buchberger(ideal_of(r, {"t^2"})));
  REQUIRE(rad.size() == 1);
  CHECK(rad.elements()[0] == P("t", r));

  auto rxy = ring_xy();
  auto rad2 = radical_zero_dim(buchberger(ideal_of(rxy, {"x^2", "y^2-1"})));
  REQUIRE(rad2.size() == 2);
  CHECK(rad2.elements()[0] == P("x", rxy));
  CHECK(rad2.elements()[1] == P("y^2-1", rxy));

  auto already = buchberger(ideal_of(r, {"t-1"}));
  CHECK(radical_zero_dim(already) == already);

  // Idempotence and dimension drop.
  auto i3 = buchberger(ideal_of(rxy, {"x^3-x^2", "y^2"}));
  auto j3 = radical_zero_dim(i3);
  CHECK(radical_zero_dim(j3) == j3);
  CHECK(*cofinite_dimension(j3) <= *cofinite_dimension(i3));
}

TEST_CASE("rational roots") {
  auto r = ring_t();
  auto roots = rational_roots(P("t^2-1", r));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rational(-1));
  CHECK(roots[1] == Rational(1));

  CHECK(rational_roots(P("t^2-2", r)).empty());
  CHECK(rational_roots(P("t^3-t^2", r)) ==
        std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(rational_roots(P("2*t-1", r)) == std::vector<Rational>{Rational(1, 2)});
  CHECK(rational_roots(P("5", r)).empty());
  CHECK(rational_roots(P("t", r)) == std::vector<Rational>{Rational(0)});
}

TEST_CASE("maximal points") {
  auto r = ring_t();
  auto pts = maximal_points(buchberger(ideal_of(r, {"t^2-1"})));
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == std::vector<Rational>{Rational(-1)});
  CHECK(pts[1] == std::vector<Rational>{Rational(1)});

  auto rxy = ring_xy();
  auto pts2 = maximal_points(buchberger(ideal_of(rxy, {"x", "y^2-1"})));
  REQUIRE(pts2.size() == 2);
  CHECK(pts2[0] == (std::vector<Rational>{Rational(0), Rational(-1)}));
  CHECK(pts2[1] == (std::vector<Rational>{Rational(0), Rational(1)}));

  CHECK_THROWS_AS(maximal_points(buchberger(ideal_of(r, {"t^2-2"}))), Error);
  try {
    maximal_points(buchberger(ideal_of(r, {"t^2-2"})));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonRationalPoint);
  }

  // A point grid where not every candidate combination vanishes:
  // V(x^2-x, y^2-y, x*y) = {(0,0), (1,0), (0,1)}.
  auto pts3 = maximal_points(buchberger(ideal_of(rxy, {"x^2-x", "y^2-y", "x*y"})));
  REQUIRE(pts3.size() == 3);
  CHECK(pts3[0] == (std::vector<Rational>{Rational(0), Rational(0)}));
  CHECK(pts3[1] == (std::vector<Rational>{Rational(0), Rational(1)}));
  CHECK(pts3[2] == (std::vector<Rational>{Rational(1), Rational(0)}));
}

TEST_CASE("crt idempotents") {
  auto r = ring_t();
  QuotientAlgebra q(buchberger(ideal_of(r, {"t^2-1"})));
  auto pts = maximal_points(q.groebner());
  auto es = crt_idempotents(q, pts);
  REQUIRE(es.size() == 2);
  // Points sorted: t=-1 first, so e1 = (1-t)/2, e2 = (1+t)/2.
  CHECK(q.from_coords(es[0]) == P("1/2-1/2*t", r));
  CHECK(q.from_coords(es[1]) == P("1/2+1/2*t", r));

  QuotientAlgebra q1(buchberger(ideal_of(r, {"t-1"})));
  auto es1 = crt_idempotents(q1, maximal_points(q1.groebner()));
  REQUIRE(es1.size() == 1);
  CHECK(q1.from_coords(es1[0]) == P("1", r));

  auto rxy = ring_xy();
  QuotientAlgebra q2(buchberger(ideal_of(rxy, {"x", "y^2-1"})));
  auto es2 = crt_idempotents(q2, maximal_points(q2.groebner()));
  CHECK(q2.from_coords(es2[0]) == P("1/2-1/2*y", rxy));
  CHECK(q2.from_coords(es2[1]) == P("1/2+1/2*y", rxy));
}
