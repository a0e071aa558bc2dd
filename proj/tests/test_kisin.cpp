#include <functional>
#include <set>

#include "catch_amalgamated.hpp"
#include "swt/kisin.hpp"

using namespace swt;

namespace {

using Vec = std::vector<i64>;

void for_each_tuple(int f, i64 lo, i64 hi, const std::function<void(const Vec&)>& fn) {
  Vec r(f, lo);
  while (true) {
    fn(r);
    int k = 0;
    while (k < f && r[k] == hi) r[k++] = lo;
    if (k == f) return;
    ++r[k];
  }
}

bool congruent_zero(const Context& ctx, const Vec& r) {
  i64 acc = 0;
  for (int i = 0; i < ctx.f; ++i) acc += r[i] * ipow(ctx.p, ctx.f - 1 - i);
  return mod(acc, ctx.m1) == 0;
}

// Oracle: every cyclic tuple assembled from zero runs and +-(-1,p-1,...,p-1,p) strings, plus the flags.
std::set<Vec> assembled_tuples(const Context& ctx) {
  const int f = ctx.f;
  const i64 p = ctx.p;
  std::set<Vec> out;
  out.insert(Vec(f, p - 1));
  out.insert(Vec(f, -(p - 1)));
  std::function<void(Vec&, int)> fill = [&](Vec& lin, int pos) {
    if (pos == f) {
      for (int o = 0; o < f; ++o) {
        Vec r(f);
        for (int k = 0; k < f; ++k) r[(o + k) % f] = lin[k];
        out.insert(r);
      }
      return;
    }
    lin[pos] = 0;
    fill(lin, pos + 1);
    for (int len = 2; pos + len <= f; ++len)
      for (i64 eps : {1, -1}) {
        for (int k = 0; k < len; ++k) lin[pos + k] = eps * (k == 0 ? -1 : (k == len - 1 ? p : p - 1));
        fill(lin, pos + len);
      }
  };
  Vec lin(f);
  fill(lin, 0);
  return out;
}

// Oracle for P': literal transcription over explicit windows.
bool pprime_oracle(const Context& ctx, const Vec& r) {
  const i64 p = ctx.p;
  const int f = ctx.f;
  auto at = [&](int i) { return r[mod(i, f)]; };
  bool zero = true;
  for (i64 v : r) {
    if (v != 0 && v != 1 && v != p - 1 && v != p) return false;
    zero = zero && v == 0;
  }
  for (int i = 0; i < f; ++i) {
    if (at(i) == p && !(at(i + 1) == 0 || at(i + 1) == 1)) return false;
    if ((at(i) == 1 || at(i) == p - 1) && !(at(i + 1) == p - 1 || at(i + 1) == p)) return false;
    if (at(i) == 0 && !zero) {
      bool fwd = false, bwd = false;
      for (int s = 1; s <= f && !fwd; ++s) {
        bool ok = at(i + s) == 1;
        for (int k = 1; k < s; ++k) ok = ok && at(i + k) == 0;
        fwd = ok;
      }
      for (int t = 1; t <= f && !bwd; ++t) {
        bool ok = at(i - t) == p;
        for (int k = 1; k < t; ++k) ok = ok && at(i - k) == 0;
        bwd = ok;
      }
      if (!fwd || !bwd) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("alpha values") {
  auto F = make_field(3, 1);
  auto one = FieldElem::one(F);
  auto ctx = make_context(3, 3);
  auto N = rank_one({1, 2, 3}, one);
  CHECK(alpha(ctx, N, 0) == Rational(14, 13));
  CHECK(alpha(ctx, N, 1) == Rational(16, 13));
  CHECK(alpha(ctx, N, 2) == Rational(9, 13));
  for (int i = 0; i < 3; ++i) {
    CHECK(alpha(ctx, rank_one({0, 0, 0}, one), i) == Rational(0));
    CHECK(alpha(ctx, rank_one({2, 2, 2}, one), i) == Rational(1));
  }
  auto c2 = make_context(3, 2);
  CHECK(alpha_diff(c2, rank_one({2, 2}, one), rank_one({0, 0}, one), 0) == Rational(1));
  CHECK(alpha_diff(c2, rank_one({2, 2}, one), rank_one({0, 0}, one), 1) == Rational(1));
  CHECK(alpha_diff(c2, rank_one({1, 3}, one), rank_one({2, 0}, one), 0) == Rational(1));
  CHECK(alpha_diff(c2, rank_one({1, 3}, one), rank_one({2, 0}, one), 1) == Rational(0));
  CHECK(alpha_diff(c2, rank_one({1, 1}, one), rank_one({1, 1}, one), 0) == Rational(0));
}

TEST_CASE("alpha identity, exhaustive") {
  auto one = FieldElem::one(make_field(3, 1));
  for (i64 p : {3, 5})
    for (int f = 1; f <= 3; ++f) {
      auto ctx = make_context(p, f);
      for_each_tuple(f, 0, p, [&](const Vec& r) {
        auto N = rank_one(r, one);
        for (int i = 0; i < f; ++i) CHECK(alpha(ctx, N, i) + r[i] == p * alpha(ctx, N, mod(i - 1, f)));
      });
    }
}

TEST_CASE("hom existence and tS isomorphism") {
  auto F = make_field(3, 2);
  auto one = FieldElem::one(F);
  FieldElem g(F, {0, 1});
  auto ctx = make_context(3, 2);
  CHECK(hom_exists(ctx, rank_one({2, 0}, one), rank_one({2, 0}, one)));
  CHECK(hom_exists(ctx, rank_one({2, 2}, one), rank_one({0, 0}, one)));
  CHECK_FALSE(hom_exists(ctx, rank_one({0, 0}, one), rank_one({2, 2}, one)));
  CHECK_FALSE(hom_exists(ctx, rank_one({0, 0}, one), rank_one({0, 0}, g)));
  CHECK(tS_iso(ctx, rank_one({3, 0}, one), rank_one({0, 1}, one)));
  CHECK_FALSE(tS_iso(ctx, rank_one({3, 0}, one), rank_one({3, 0}, g)));
  CHECK(inertial_char(ctx, rank_one({0, 0}, one)).is_trivial());
  CHECK(inertial_char(ctx, rank_one({2, 2}, one)).is_trivial());

  // A nonzero map forces equal characters.
  for (int f = 1; f <= 2; ++f) {
    auto c = make_context(3, f);
    for_each_tuple(f, 0, 3, [&](const Vec& r1) {
      for_each_tuple(f, 0, 3, [&](const Vec& r2) {
        if (hom_exists(c, rank_one(r1, one), rank_one(r2, one)))
          CHECK(char_eq(inertial_char(c, rank_one(r1, one)), inertial_char(c, rank_one(r2, one))));
      });
    });
  }
}

TEST_CASE("P' membership") {
  CHECK(in_Pprime(make_context(3, 3), {2, 2, 2}));
  CHECK(in_Pprime(make_context(5, 3), {5, 0, 1}));
  CHECK_FALSE(in_Pprime(make_context(5, 2), {5, 5}));
  CHECK(in_Pprime(make_context(5, 3), {0, 0, 0}));
  for (i64 p : {3, 5})
    for (int f = 1; f <= 4; ++f) {
      auto ctx = make_context(p, f);
      for_each_tuple(f, 0, p, [&](const Vec& r) { CHECK(in_Pprime(ctx, r) == pprime_oracle(ctx, r)); });
    }
}

TEST_CASE("cyclic decomposition matches the assembled-string oracle") {
  auto c3 = make_context(3, 3);
  auto dec = decompose_cyclic(c3, {-1, 2, 3});
  REQUIRE(dec.strings.size() == 1);
  CHECK(dec.strings[0] == CyclicString{0, 3, StringKind::Plus});
  CHECK(decompose_cyclic(make_context(3, 2), {2, 2}).flag == 1);
  auto z = decompose_cyclic(c3, {0, 0, 0});
  CHECK(z.strings == std::vector<CyclicString>{{0, 3, StringKind::Zero}});
  CHECK_THROWS_AS(decompose_cyclic(c3, {1, 0, 0}), std::invalid_argument);

  for (auto [p, fmax] : std::vector<std::pair<i64, int>>{{3, 4}, {5, 3}, {7, 2}}) {
    for (int f = 1; f <= fmax; ++f) {
      auto ctx = make_context(p, f);
      auto assembled = assembled_tuples(ctx);
      for (const auto& r : assembled) CHECK(congruent_zero(ctx, r));
      for_each_tuple(f, -p, p, [&](const Vec& r) {
        bool cong = congruent_zero(ctx, r);
        CHECK(cong == (assembled.count(r) > 0));
        auto d = try_decompose_cyclic(ctx, r);
        CHECK(d.has_value() == cong);
        if (d) {
          CHECK(recompose(ctx, *d) == r);
          int covered = 0;
          for (const auto& s : d->strings) covered += s.length;
          CHECK((d->flag != 0 || covered == f));
        }
      });
    }
  }
}

TEST_CASE("necessary map conditions hold whenever a map exists") {
  auto c3 = make_context(3, 3);
  CHECK(necessary_map_conditions(c3, {3, 0, 1}, IndexSet::of(3, {0, 1})));
  CHECK_FALSE(necessary_map_conditions(c3, {3, 0, 1}, IndexSet::of(3, {0, 1, 2})));
  CHECK(necessary_map_conditions(c3, {0, 0, 0}, IndexSet::of(3, {1})));

  auto one = FieldElem::one(make_field(3, 1));
  for (i64 p : {3, 5})
    for (int f = 1; f <= 3; ++f) {
      auto ctx = make_context(p, f);
      for_each_tuple(f, 0, p, [&](const Vec& r) {
        for (std::uint32_t m = 0; m < (1u << f); ++m) {
          IndexSet J(f, m);
          ExtensionType e{r, one, one, J};
          if (hom_exists(ctx, e.quotient(), e.sub())) CHECK(necessary_map_conditions(ctx, r, J));
        }
      });
    }
}

TEST_CASE("J_max agrees with brute force") {
  auto c3 = make_context(3, 3);
  CHECK(jmax(c3, {1, 2, 3}, IndexSet::of(3, {0})) == IndexSet::of(3, {1, 2}));
  CHECK(jmax(c3, {2, 3, 2}, IndexSet::of(3, {0, 2})) == IndexSet::of(3, {0, 2}));
  CHECK(jmax(c3, {0, 0, 0}, IndexSet::full(3)).is_empty());

  for (i64 p : {3, 5})
    for (int f = 1; f <= 4; ++f) {
      if (p == 5 && f == 4) continue;
      auto ctx = make_context(p, f);
      for_each_tuple(f, 0, p, [&](const Vec& r) {
        for (std::uint32_t m = 0; m < (1u << f); ++m) {
          IndexSet J(f, m);
          // Strings (1, p-1, ..., p-1, p) crossing J's boundary.
          std::vector<std::pair<int, int>> strings;
          for (int i = 0; i < f; ++i) {
            if (r[i] != 1) continue;
            for (int s = 1; s < f; ++s) {
              bool shape = r[(i + s) % f] == p;
              for (int k = 1; k < s; ++k) shape = shape && r[(i + k) % f] == p - 1;
              if (!shape) continue;
              bool in = true, out = true;
              for (int k = 1; k <= s; ++k) in = in && J.has(i + k), out = out && !J.has(i + k);
              if ((J.has(i) && out) || (!J.has(i) && in)) strings.push_back({i, s});
              break;
            }
          }
          std::vector<IndexSet> found;
          for (std::uint32_t m2 = 0; m2 < (1u << f); ++m2) {
            IndexSet K(f, m2);
            bool ok = h_value(ctx, r, K) == h_value(ctx, r, J);
            for (int i = 0; i < f; ++i) ok = ok && !(r[i] == 0 && K.has(i));
            for (auto [i, s] : strings) {
              ok = ok && !K.has(i);
              for (int k = 1; k <= s; ++k) ok = ok && K.has(i + k);
            }
            if (ok) found.push_back(K);
          }
          auto got = jmax(ctx, r, J);
          REQUIRE(!found.empty());
          CHECK(std::find(found.begin(), found.end(), got) != found.end());
          bool all_pm1 = std::all_of(r.begin(), r.end(), [&](i64 v) { return v == p - 1; });
          if (!all_pm1) CHECK(found.size() == 1);
          CHECK(jmax(ctx, r, got) == got);
        }
      });
    }
}

TEST_CASE("exceptional case and twists") {
  auto F = make_field(3, 2);
  auto one = FieldElem::one(F);
  FieldElem g(F, {0, 1});
  auto ctx = make_context(3, 2);
  CHECK(exceptional_case(ctx, {{2, 2}, one, one, IndexSet::full(2)}));
  CHECK_FALSE(exceptional_case(ctx, {{2, 2}, one, g, IndexSet::full(2)}));
  CHECK_FALSE(exceptional_case(ctx, {{3, 3}, one, one, IndexSet::full(2)}));
  CHECK(all_p_caveat(make_context(3, 1), {{3}, one, one, IndexSet::full(1)}));

  auto N = rank_one({2, 0}, g);
  auto T = twist_rank_one(N, {1, 1}, one);
  CHECK(T.r == Vec{3, 1});
  CHECK(T.a == g);
  CHECK(twist_rank_one(N, {0, 0}, one).r == N.r);
  CHECK(char_eq(inertial_char(ctx, T), char_mul(inertial_char(ctx, N), inertial_char(ctx, rank_one({1, 1}, one)))));
  CHECK_THROWS_AS(twist_rank_one(N, {0, 0}, FieldElem::zero(F)), std::invalid_argument);
  CHECK_THROWS_AS(rank_one({0}, FieldElem::zero(F)), std::invalid_argument);
}
