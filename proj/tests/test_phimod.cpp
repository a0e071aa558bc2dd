#include "catch_amalgamated.hpp"
#include "swt/phimod.hpp"

using namespace swt;

namespace {

using Vec = std::vector<i64>;

UPoly cst(const FieldElem& c) { return UPoly::constant(c); }

PhiMorphism identity(const FieldPtr& F, int f) {
  PhiMorphism g;
  for (int i = 0; i < f; ++i) g.G.push_back({UPoly::constant(FieldElem::one(F)), UPoly(F), UPoly(F), UPoly::constant(FieldElem::one(F))});
  return g;
}

}  // namespace

TEST_CASE("build_extension normal form") {
  auto ctx = make_context(3, 2);
  auto F = make_field(3, 1);
  auto a = FieldElem::from_int(F, 2), b = FieldElem::one(F), c = FieldElem::from_int(F, 2);
  ExtensionType type{{2, 0}, a, b, IndexSet::of(2, {0, 1})};

  auto split = build_extension(ctx, type, {UPoly(F), UPoly(F)});
  CHECK(split.x[0].is_zero());
  CHECK(phi_matrix(split, 0).m01.is_zero());

  auto M = build_extension(ctx, type, {cst(c), UPoly(F)});
  CHECK(M.x[0] == cst(c));
  CHECK(M.quot.r == type.h());

  // r_1 = 0 forces x_1 = 0.
  CHECK_THROWS_AS(build_extension(ctx, type, {UPoly(F), cst(c)}), std::invalid_argument);
  ExtensionType off{{2, 2}, a, b, IndexSet::of(2, {0})};
  CHECK_THROWS_AS(build_extension(ctx, off, {UPoly(F), cst(c)}), std::invalid_argument);
  CHECK_THROWS_AS(build_extension(ctx, type, {UPoly::monomial(c, 1), UPoly(F)}), std::invalid_argument);
  CHECK_THROWS_AS(build_extension(ctx, type, {cst(c)}), std::invalid_argument);
}

TEST_CASE("phi matrices follow the basis relations") {
  auto ctx = make_context(3, 2);
  auto F = make_field(3, 1);
  auto a = FieldElem::from_int(F, 2), b = FieldElem::one(F), c = FieldElem::from_int(F, 2);
  ExtensionType type{{2, 0}, a, b, IndexSet::of(2, {0, 1})};
  auto M = build_extension(ctx, type, {cst(c), UPoly(F)});
  Vec h = type.h();
  auto m0 = phi_matrix(M, 0), m1 = phi_matrix(M, 1);
  CHECK(m0.m00 == UPoly::monomial(b, static_cast<int>(2 - h[0])));
  CHECK(m0.m11 == UPoly::monomial(a, static_cast<int>(h[0])));
  CHECK(m0.m10.is_zero());
  CHECK(m1.m11 == UPoly::monomial(FieldElem::one(F), static_cast<int>(h[1])));
}

TEST_CASE("morphism checks") {
  auto ctx = make_context(3, 2);
  auto F = make_field(3, 1);
  auto a = FieldElem::from_int(F, 2), b = FieldElem::one(F), c = FieldElem::one(F);
  ExtensionType type{{2, 0}, a, b, IndexSet::of(2, {0})};
  auto M = build_extension(ctx, type, {cst(c), UPoly(F)});
  auto id = identity(F, 2);
  CHECK(check_phi_morphism(ctx, id, M, M));
  CHECK(generically_invertible(id));

  PhiMorphism scaled = id;
  scaled.G[0].m00 = UPoly::monomial(FieldElem::one(F), 1);
  CHECK_FALSE(check_phi_morphism(ctx, scaled, M, M));
  CHECK(generically_invertible(scaled));

  PhiMorphism zero_col = id;
  zero_col.G[1].m00 = UPoly(F);
  CHECK_FALSE(generically_invertible(zero_col));

  PhiMorphism short_g;
  short_g.G.push_back(id.G[0]);
  CHECK_FALSE(check_phi_morphism(ctx, short_g, M, M));
}

TEST_CASE("forward transport") {
  auto ctx = make_context(3, 2);
  auto F = make_field(3, 1);
  auto a = FieldElem::from_int(F, 2), b = FieldElem::one(F), c = FieldElem::from_int(F, 2);

  SECTION("trivial target") {
    auto M = make_extension(rank_one({0, 0}, b), rank_one({1, 3}, a), {cst(c), UPoly(F)});
    auto t = transport_forward(ctx, M, M.quot, M.sub);
    CHECK(t.target == M);
    CHECK(t.map.G == identity(F, 2).G);
  }

  SECTION("quotient M(1,3) toward M(2,0)") {
    auto src_quot = rank_one({1, 3}, a), dst_quot = rank_one({2, 0}, a);
    CHECK(alpha_int(ctx, src_quot.r, dst_quot.r, 0) == 1);
    CHECK(alpha_int(ctx, src_quot.r, dst_quot.r, 1) == 0);
    auto M = make_extension(rank_one({0, 0}, b), src_quot, {cst(c), UPoly(F)});
    auto t = transport_forward(ctx, M, dst_quot, rank_one({0, 0}, b));
    CHECK(t.target.x[0] == cst(c));
    CHECK(t.target.x[1].is_zero());
    CHECK(check_phi_morphism(ctx, t.map, M, t.target));
    CHECK(generically_invertible(t.map));

    // A parameter at index 1 sits after alpha_0 = 1.
    auto bad = make_extension(rank_one({0, 0}, b), src_quot, {UPoly(F), cst(c)});
    CHECK_THROWS_AS(transport_forward(ctx, bad, dst_quot, rank_one({0, 0}, b)), std::domain_error);

    // Perturbing one diagonal exponent breaks equivariance.
    PhiMorphism g = t.map;
    g.G[1].m11 = g.G[1].m11 * UPoly::monomial(FieldElem::one(F), 1);
    CHECK_FALSE(check_phi_morphism(ctx, g, M, t.target));
  }

  SECTION("missing hom") {
    auto M = make_extension(rank_one({0, 0}, b), rank_one({2, 0}, a), {cst(c), UPoly(F)});
    CHECK_THROWS_AS(transport_forward(ctx, M, rank_one({1, 3}, a), M.sub), std::domain_error);
  }
}

TEST_CASE("forward transport is exhaustive over parameters") {
  auto ctx = make_context(3, 2);
  auto F = make_field(3, 1);
  auto a = FieldElem::from_int(F, 2), b = FieldElem::one(F);
  auto src_quot = rank_one({1, 3}, a), dst_quot = rank_one({2, 0}, a);
  auto sub = rank_one({0, 0}, b);
  std::vector<std::vector<UPoly>> seen;
  for (const auto& c : field_elements(F)) {
    auto M = make_extension(sub, src_quot, {cst(c), UPoly(F)});
    auto t = transport_forward(ctx, M, dst_quot, sub);
    CHECK(check_phi_morphism(ctx, t.map, M, t.target));
    CHECK(generically_invertible(t.map));
    for (const auto& s : seen) CHECK_FALSE(s == t.target.x);
    seen.push_back(t.target.x);
  }
  CHECK(seen.size() == 3);
}

TEST_CASE("forward transport composes") {
  auto ctx = make_context(3, 2);
  auto F = make_field(3, 1);
  auto a = FieldElem::one(F), b = FieldElem::one(F), c = FieldElem::from_int(F, 2);
  // Chains of quotients and subs where every step has a hom.
  std::vector<Vec> quots{{0, 0}, {1, 3}, {2, 0}};
  std::vector<Vec> subs{{0, 0}, {0, 0}, {0, 0}};
  int compared = 0;
  for (const auto& quot : quots)
    for (const auto& mid : quots)
      for (const auto& dst : quots) {
        auto N = rank_one(quot, a), N1 = rank_one(mid, a), N2 = rank_one(dst, a);
        if (!hom_exists(ctx, N, N1) || !hom_exists(ctx, N1, N2)) continue;
        auto M = make_extension(rank_one(subs[0], b), N, {cst(c), UPoly(F)});
        try {
          auto step1 = transport_forward(ctx, M, N1, M.sub);
          auto step2 = transport_forward(ctx, step1.target, N2, M.sub);
          auto direct = transport_forward(ctx, M, N2, M.sub);
          CHECK(step2.target == direct.target);
          for (int i = 0; i < 2; ++i) CHECK(step2.map.G[i] * step1.map.G[i] == direct.map.G[i]);
          ++compared;
        } catch (const std::domain_error&) {
        }
      }
  CHECK(compared >= 4);
}

TEST_CASE("reverse transport") {
  auto ctx = make_context(3, 2);
  auto F = make_field(3, 1);
  auto a = FieldElem::from_int(F, 2), b = FieldElem::one(F), c = FieldElem::from_int(F, 2);
  auto M = make_extension(rank_one({0, 0}, b), rank_one({2, 0}, a), {cst(c), UPoly(F)});

  auto same = transport_reverse(ctx, M, M.quot, M.sub);
  CHECK(same.target.x == M.x);

  auto t = transport_reverse(ctx, M, rank_one({1, 3}, a), M.sub);
  CHECK(check_phi_morphism(ctx, t.from_source, M, t.middle));
  CHECK(check_phi_morphism(ctx, t.from_target, t.target, t.middle));
  CHECK(generically_invertible(t.from_source));
  CHECK(generically_invertible(t.from_target));

  auto deg2 = make_extension(M.sub, M.quot, {UPoly::monomial(c, 2), UPoly(F)});
  CHECK_THROWS_AS(transport_reverse(ctx, deg2, M.quot, M.sub), std::domain_error);
  CHECK_THROWS_AS(transport_reverse(ctx, M, rank_one({2, 2}, a), M.sub), std::domain_error);
}

TEST_CASE("twisting") {
  auto F = make_field(3, 1);
  auto a = FieldElem::from_int(F, 2), b = FieldElem::one(F), c = FieldElem::from_int(F, 2);
  auto M = make_extension(rank_one({1, 0}, b), rank_one({2, 1}, a), {cst(c), UPoly(F)});
  CHECK(twist_extension(M, {0, 0}, FieldElem::one(F)) == M);

  auto T = twist_extension(M, {1, 0}, FieldElem::one(F));
  CHECK(T.sub.r == Vec{2, 0});
  CHECK(T.quot.r == Vec{3, 1});

  auto twice = twist_extension(twist_extension(M, {1, 0}, a), {0, 2}, a);
  CHECK(twice == twist_extension(M, {1, 2}, a * a));

  CHECK_THROWS_AS(twist_extension(M, {1, 0}, FieldElem::zero(F)), std::invalid_argument);
}
