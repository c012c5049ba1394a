#include <doctest.h>

#include <numeric>

#include "ckm/errors.hpp"
#include "ckm/roots.hpp"

using namespace ckm;

namespace {

CartanData A1() { return CartanData::validate({{2}}); }
CartanData A2() { return CartanData::validate({{2, -1}, {-1, 2}}); }
CartanData B2() { return CartanData::validate({{2, -2}, {-1, 2}}); }
CartanData A1affine() { return CartanData::validate({{2, -2}, {-2, 2}}); }

}  // namespace

TEST_CASE("gcm validation and kinds") {
  CHECK(A2().kind() == CartanKind::Finite);
  CHECK(A2().d(0) == 1);
  CHECK(A2().d(1) == 1);

  CHECK(A1affine().kind() == CartanKind::Affine);
  CHECK(A1affine().d(0) == 1);
  CHECK(A1affine().d(1) == 1);

  CHECK(B2().kind() == CartanKind::Finite);
  CHECK(B2().d(0) == 1);
  CHECK(B2().d(1) == 2);

  // G2 is still finite; past the a_12*a_21 = 4 boundary turns hyperbolic.
  CHECK(CartanData::validate({{2, -3}, {-1, 2}}).kind() == CartanKind::Finite);
  CHECK(CartanData::validate({{2, -3}, {-2, 2}}).kind() == CartanKind::Indefinite);

  CHECK_THROWS_AS(CartanData::validate({{2, 0}, {-1, 2}}), Error);
  CHECK_THROWS_AS(CartanData::validate({{1}}), Error);
  CHECK_THROWS_AS(CartanData::validate({{2, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(CartanData::validate({{2, -1}, {-1, 2}, {0, 0}}), Error);

  try {
    CartanData::validate({{2, 0}, {-1, 2}});
    FAIL("expected NotGCM");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotGCM);
  }
}

TEST_CASE("symmetrizer invariant on assorted matrices") {
  for (const auto& c : {A2(), B2(), A1affine(),
                        CartanData::validate({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}),
                        CartanData::validate({{2, -4}, {-1, 2}})}) {
    for (std::size_t i = 0; i < c.rank(); ++i) {
      CHECK(c.d(i) >= 1);
      for (std::size_t j = 0; j < c.rank(); ++j) {
        CHECK(c.d(i) * c.a(i, j) == c.d(j) * c.a(j, i));
      }
    }
  }
}

TEST_CASE("symmetric form examples") {
  auto a2 = A2();
  std::vector<int> e1{1, 0}, e2{0, 1}, theta{1, 1};
  CHECK(a2.form(e1, e2) == Rational(-1));
  CHECK(a2.form(theta, theta) == Rational(2));
  CHECK(a2.form(e1, e1) == Rational(2));

  auto b2 = B2();
  CHECK(b2.form(e1, e2) == Rational(-2));
  CHECK(b2.form(e2, e2) == Rational(4));
}

TEST_CASE("A2 roots") {
  auto t = roots_up_to_height(A2(), 3);
  CHECK(t.roots().size() == 3);
  CHECK(t.mult({1, 0}) == 1);
  CHECK(t.mult({0, 1}) == 1);
  CHECK(t.mult({1, 1}) == 1);
  CHECK(t.mult({2, 1}) == 0);
  CHECK(t.max_height() == 2);
}

TEST_CASE("B2 roots") {
  auto t = all_positive_roots(B2());
  CHECK(t.roots().size() == 4);
  CHECK(t.mult({1, 0}) == 1);
  CHECK(t.mult({0, 1}) == 1);
  CHECK(t.mult({1, 1}) == 1);
  CHECK(t.mult({2, 1}) == 1);
}

TEST_CASE("affine A1 roots by Peterson") {
  auto c = A1affine();
  auto t = roots_up_to_height(c, 4);
  // Height <= 2: both simples and delta.
  CHECK(t.mult({1, 0}) == 1);
  CHECK(t.mult({0, 1}) == 1);
  CHECK(t.mult({1, 1}) == 1);
  // Height <= 4: real roots alpha_i + delta and the imaginary 2*delta.
  CHECK(t.mult({2, 1}) == 1);
  CHECK(t.mult({1, 2}) == 1);
  CHECK(t.mult({2, 2}) == 1);
  CHECK(t.mult({3, 1}) == 0);
  CHECK(t.mult({2, 0}) == 0);
}

TEST_CASE("real roots have multiplicity one; reflections preserve tables") {
  for (const auto& c : {A2(), B2(), A1affine()}) {
    auto t = roots_up_to_height(c, 8);
    const std::size_t l = c.rank();
    for (const auto& [beta, m] : t.roots()) {
      if (t.cartan().form(beta, beta).sign() > 0) CHECK(m == 1);
      // s_i(beta) = beta - beta(h_i) alpha_i with beta(h_i) = sum_j a_ij c_j.
      for (std::size_t i = 0; i < l; ++i) {
        long pairing = 0;
        for (std::size_t j = 0; j < l; ++j) pairing += c.a(i, j) * beta[j];
        std::vector<int> image = beta;
        image[i] -= static_cast<int>(pairing);
        bool positive = true;
        int height = 0;
        for (int x : image) {
          if (x < 0) positive = false;
          height += x;
        }
        if (!positive || height < 1 || height > 8) continue;
        CHECK(t.mult(image) == m);
      }
    }
  }
}

TEST_CASE("finite tables stabilize") {
  auto t = all_positive_roots(A2());
  auto wide = roots_up_to_height(A2(), 2 * t.max_height());
  CHECK(wide.roots() == t.roots());
}

TEST_CASE("dominance predicate") {
  CHECK(is_dominant_integral(Weight{{Rational(3), Rational(2)}}));
  CHECK(is_dominant_integral(Weight{{Rational(0)}}));
  CHECK_FALSE(is_dominant_integral(Weight{{Rational(-1), Rational(0)}}));
  CHECK_FALSE(is_dominant_integral(Weight{{Rational(1, 2)}}));
}

TEST_CASE("weyl dimensions") {
  CHECK(weyl_dim(A1(), Weight{{Rational(2)}}) == 3);
  CHECK(weyl_dim(A2(), Weight{{Rational(1), Rational(1)}}) == 8);
  CHECK(weyl_dim(A2(), Weight{{Rational(1), Rational(0)}}) == 3);
  CHECK(weyl_dim(B2(), Weight{{Rational(0), Rational(1)}}) == 5);
  CHECK(weyl_dim(B2(), Weight{{Rational(1), Rational(0)}}) == 4);

  CHECK_THROWS_AS(weyl_dim(A1affine(), Weight{{Rational(1), Rational(1)}}), Error);
  CHECK_THROWS_AS(weyl_dim(A2(), Weight{{Rational(-1), Rational(0)}}), Error);
}
