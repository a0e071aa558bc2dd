#include <random>

#include "catch_amalgamated.hpp"
#include "swt/ground.hpp"

using namespace swt;

namespace {

// Independent oracle: first monic quadratic (low-to-high lex order) with no root.
std::vector<i64> first_rootless_quadratic(i64 p) {
  for (i64 c0 = 0; c0 < p; ++c0)
    for (i64 c1 = 0; c1 < p; ++c1) {
      bool root = false;
      for (i64 x = 0; x < p; ++x) root = root || (c0 + c1 * x + x * x) % p == 0;
      if (!root) return {c0, c1, 1};
    }
  return {};
}

UPoly random_poly(const FieldPtr& F, std::mt19937& rng, int maxdeg) {
  auto elems = field_elements(F);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(elems.size()) - 1);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  std::vector<FieldElem> c;
  int n = deg(rng);
  for (int j = 0; j <= n; ++j) c.push_back(elems[pick(rng)]);
  return UPoly(F, c);
}

}  // namespace

TEST_CASE("context validation") {
  auto c = make_context(7, 4);
  CHECK(c.m1 == 2400);
  CHECK(c.m2 == 5764800);
  CHECK_THROWS_AS(make_context(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_context(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_context(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_context(3, 1, 0), std::invalid_argument);
  auto big = make_context(5, 12);
  CHECK(big.m2 > (i64{1} << 53));
  CHECK_THROWS_AS(make_context(7, 12), std::invalid_argument);
}

TEST_CASE("field modulus is the smallest monic irreducible") {
  CHECK(make_field(3, 1)->modulus == std::vector<i64>{0, 1});
  CHECK(make_field(5, 1)->modulus == std::vector<i64>{0, 1});
  for (i64 p : {3, 5, 7}) CHECK(make_field(p, 2)->modulus == first_rootless_quadratic(p));
  CHECK(make_field(3, 2)->modulus == std::vector<i64>{1, 0, 1});
  CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(3, 0), std::invalid_argument);
}

TEST_CASE("field axioms and Frobenius, exhaustive") {
  for (i64 p : {3, 5, 7})
    for (int d : {1, 2}) {
      auto F = make_field(p, d);
      auto all = field_elements(F);
      REQUIRE(static_cast<i64>(all.size()) == ipow(p, d));
      auto zero = FieldElem::zero(F), one = FieldElem::one(F);
      for (const auto& x : all) {
        CHECK(x + zero == x);
        CHECK(x * one == x);
        CHECK(x + (-x) == zero);
        CHECK(x.pow(ipow(p, d)) == x);
        if (!x.is_zero()) CHECK(x * x.inv() == one);
        FieldElem y = x;
        for (int k = 0; k < d; ++k) y = frobenius(y);
        CHECK(y == x);
        if (d == 1) CHECK(frobenius(x) == x);
      }
      if (p * d > 10) continue;
      for (const auto& x : all)
        for (const auto& y : all) {
          CHECK(x * y == y * x);
          CHECK(frobenius(x * y) == frobenius(x) * frobenius(y));
          CHECK(frobenius(x + y) == frobenius(x) + frobenius(y));
          for (const auto& z : all) {
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
          }
        }
    }
  auto F9 = make_field(3, 2);
  FieldElem g(F9, {0, 1});
  CHECK(frobenius(g) == g.pow(3));
  CHECK(frobenius(g) != g);
  CHECK(frobenius(FieldElem::zero(F9)).is_zero());
  CHECK(frobenius(FieldElem::one(F9)).is_one());
  CHECK_THROWS_AS(FieldElem::zero(F9).inv(), std::domain_error);
}

TEST_CASE("polynomial arithmetic") {
  auto F = make_field(3, 1);
  auto one = FieldElem::one(F);
  auto u = UPoly::monomial(one, 1);
  CHECK((u * u) == UPoly::monomial(one, 2));
  CHECK((UPoly::monomial(one, 3) + UPoly::monomial(one, 5)).valuation() == 3);
  CHECK(UPoly(F).valuation() == UPoly::kInfiniteValuation);
  CHECK(UPoly(F).degree() == -1);
  auto upu2 = u + UPoly::monomial(one, 2);
  CHECK_THROWS_AS(div_exact(upu2, UPoly::monomial(one, 2)), std::domain_error);
  CHECK(div_exact(upu2, u) == UPoly::constant(one) + u);
  CHECK((u - u).is_zero());
  CHECK(u.shift(2) == UPoly::monomial(one, 3));
}

TEST_CASE("poly_phi") {
  auto F = make_field(3, 1);
  auto one = FieldElem::one(F);
  auto u = UPoly::monomial(one, 1);
  CHECK(poly_phi(u) == UPoly::monomial(one, 3));
  auto c = UPoly::constant(FieldElem::from_int(F, 2));
  CHECK(poly_phi(c) == c);
  CHECK(poly_phi(UPoly::constant(one) + u) == UPoly::constant(one) + UPoly::monomial(one, 3));

  std::mt19937 rng(12345);
  for (i64 p : {3, 5})
    for (int d : {1, 2}) {
      auto G = make_field(p, d);
      for (int trial = 0; trial < 200; ++trial) {
        auto a = random_poly(G, rng, 4), b = random_poly(G, rng, 4);
        CHECK(poly_phi(a * b) == poly_phi(a) * poly_phi(b));
        CHECK(poly_phi(a + b) == poly_phi(a) + poly_phi(b));
        if (!a.is_zero() && !b.is_zero()) {
          CHECK((a * b).degree() == a.degree() + b.degree());
          CHECK(div_exact(a * b, b) == a);
        }
      }
    }
}

TEST_CASE("modular helpers") {
  CHECK(mod(-1, 8) == 7);
  CHECK(powmod(3, 4, 80) == 1);
  CHECK(mulmod(i64{1} << 61, 4, (i64{1} << 61) - 1) == 4);
  CHECK_THROWS_AS(ipow(7, 40), std::overflow_error);
}
