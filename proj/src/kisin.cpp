#include "swt/kisin.hpp"

#include <stdexcept>

namespace swt {

RankOneKisin rank_one(std::vector<i64> r, FieldElem a) {
  if (a.is_zero()) throw std::invalid_argument("rank-one constant must be nonzero");
  return {std::move(r), std::move(a)};
}

static void check_len(const Context& ctx, const std::vector<i64>& s) {
  if (static_cast<int>(s.size()) != ctx.f) throw std::invalid_argument("sequence length must equal f");
}

Rational alpha_seq(const Context& ctx, const std::vector<i64>& s, int i) {
  check_len(ctx, s);
  i64 num = 0;
  for (int j = 1; j <= ctx.f; ++j) num += ipow(ctx.p, ctx.f - j) * s[mod(j + i, ctx.f)];
  return Rational(num, ctx.m1);
}

Rational alpha(const Context& ctx, const RankOneKisin& N, int i) { return alpha_seq(ctx, N.r, i); }

Rational alpha_diff(const Context& ctx, const RankOneKisin& N1, const RankOneKisin& N2, int i) {
  return alpha(ctx, N1, i) - alpha(ctx, N2, i);
}

i64 alpha_int(const Context& ctx, const std::vector<i64>& s1, const std::vector<i64>& s2, int i) {
  Rational a = alpha_seq(ctx, s1, i) - alpha_seq(ctx, s2, i);
  if (a.denominator() != 1) throw std::domain_error("alpha difference is not integral");
  return a.numerator();
}

bool hom_exists(const Context& ctx, const RankOneKisin& N1, const RankOneKisin& N2) {
  if (N1.a != N2.a) return false;
  for (int i = 0; i < ctx.f; ++i) {
    Rational a = alpha_diff(ctx, N1, N2, i);
    if (a.denominator() != 1 || a.numerator() < 0) return false;
  }
  return true;
}

InertialChar inertial_char(const Context& ctx, const RankOneKisin& N) { return char_of_exponents(ctx, N.r, 1); }

bool tS_iso(const Context& ctx, const RankOneKisin& N1, const RankOneKisin& N2) {
  return N1.a == N2.a && char_eq(inertial_char(ctx, N1), inertial_char(ctx, N2));
}

bool in_Pprime(const Context& ctx, const std::vector<i64>& r) {
  check_len(ctx, r);
  const i64 p = ctx.p;
  const int f = ctx.f;
  bool all_zero = true;
  for (i64 v : r) {
    if (v != 0 && v != 1 && v != p - 1 && v != p) return false;
    if (v != 0) all_zero = false;
  }
  if (all_zero) return true;
  auto at = [&](int i) { return r[mod(i, f)]; };
  for (int i = 0; i < f; ++i) {
    if (r[i] == p && at(i + 1) != 0 && at(i + 1) != 1) return false;
    if ((r[i] == 1 || r[i] == p - 1) && at(i + 1) != p - 1 && at(i + 1) != p) return false;
    if (r[i] == 0) {
      int k = i + 1;
      while (at(k) == 0) ++k;
      if (at(k) != 1) return false;
      k = i - 1;
      while (at(k) == 0) --k;
      if (at(k) != p) return false;
    }
  }
  return true;
}

std::optional<CyclicDecomposition> try_decompose_cyclic(const Context& ctx, const std::vector<i64>& r) {
  check_len(ctx, r);
  const i64 p = ctx.p;
  const int f = ctx.f;
  CyclicDecomposition dec;
  bool all_zero = true;
  for (i64 v : r) all_zero = all_zero && v == 0;
  if (all_zero) {
    dec.strings.push_back({0, f, StringKind::Zero});
    return dec;
  }
  int i0 = -1;
  for (int i = 0; i < f && i0 < 0; ++i)
    if (r[i] == 1 || r[i] == -1) i0 = i;
  if (i0 < 0) {
    for (int sign : {1, -1}) {
      bool flag = true;
      for (i64 v : r) flag = flag && v == sign * (p - 1);
      if (flag) {
        dec.flag = sign;
        return dec;
      }
    }
    return std::nullopt;
  }

  int k = 0;
  while (k < f) {
    const int idx = (i0 + k) % f;
    const i64 v = r[idx];
    if (v == 0) {
      int len = 0;
      while (k < f && r[(i0 + k) % f] == 0) ++k, ++len;
      dec.strings.push_back({idx, len, StringKind::Zero});
      continue;
    }
    if (v != 1 && v != -1) return std::nullopt;
    const i64 eps = -v;
    int len = 1;
    ++k;
    bool closed = false;
    while (k < f) {
      const i64 w = r[(i0 + k) % f];
      ++k, ++len;
      if (w == eps * p) {
        closed = true;
        break;
      }
      if (w != eps * (p - 1)) return std::nullopt;
    }
    if (!closed) return std::nullopt;
    dec.strings.push_back({idx, len, eps > 0 ? StringKind::Plus : StringKind::Minus});
  }
  return dec;
}

CyclicDecomposition decompose_cyclic(const Context& ctx, const std::vector<i64>& r) {
  check_len(ctx, r);
  i64 acc = 0;
  for (int i = 0; i < ctx.f; ++i) acc = mod(acc + mulmod(r[i], powmod(ctx.p, ctx.f - 1 - i, ctx.m1), ctx.m1), ctx.m1);
  if (acc != 0) throw std::invalid_argument("tuple is not congruent to 0 mod p^f-1");
  auto dec = try_decompose_cyclic(ctx, r);
  if (!dec) throw std::domain_error("congruent tuple failed to decompose");
  return *dec;
}

std::vector<i64> recompose(const Context& ctx, const CyclicDecomposition& dec) {
  std::vector<i64> r(ctx.f, 0);
  if (dec.flag != 0) {
    for (auto& v : r) v = dec.flag * (ctx.p - 1);
    return r;
  }
  for (const auto& s : dec.strings) {
    if (s.kind == StringKind::Zero) continue;
    const i64 eps = s.kind == StringKind::Plus ? 1 : -1;
    for (int k = 0; k < s.length; ++k) {
      i64 v = k == 0 ? -1 : (k == s.length - 1 ? ctx.p : ctx.p - 1);
      r[(s.begin + k) % ctx.f] = eps * v;
    }
  }
  return r;
}

bool necessary_map_conditions(const Context& ctx, const std::vector<i64>& r, IndexSet J) {
  if (!in_Pprime(ctx, r)) return false;
  for (int i = 0; i < ctx.f; ++i) {
    if ((r[i] == ctx.p - 1 || r[i] == ctx.p) && !J.has(i)) return false;
    if (r[i] == 1 && J.has(i)) return false;
  }
  return true;
}

std::vector<i64> h_of(const std::vector<i64>& r, IndexSet J) {
  std::vector<i64> h(r.size(), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (J.has(static_cast<int>(i))) h[i] = r[i];
  return h;
}

i64 h_value(const Context& ctx, const std::vector<i64>& r, IndexSet J) {
  return char_of_exponents(ctx, h_of(r, J), 1).exponent;
}

IndexSet jmax(const Context& ctx, const std::vector<i64>& r, IndexSet J) {
  check_len(ctx, r);
  const int f = ctx.f;
  const i64 p = ctx.p;
  IndexSet out = J;
  for (int i = 0; i < f; ++i)
    if (r[i] == 0) out.set(i, false);
  for (int i = 0; i < f; ++i) {
    if (r[i] != 1) continue;
    int s = 1;
    while (s < f && r[(i + s) % f] == p - 1) ++s;
    if (s >= f || r[(i + s) % f] != p) continue;
    bool head = J.has(i);
    bool rest_in = true, rest_out = true;
    for (int k = 1; k <= s; ++k) {
      rest_in = rest_in && J.has(i + k);
      rest_out = rest_out && !J.has(i + k);
    }
    if ((head && rest_out) || (!head && rest_in)) {
      out.set(i, false);
      for (int k = 1; k <= s; ++k) out.set(i + k, true);
    }
  }
  if (h_value(ctx, r, out) != h_value(ctx, r, J)) throw std::logic_error("jmax changed h");
  return out;
}

RankOneKisin ExtensionType::quotient() const { return rank_one(h(), a); }

RankOneKisin ExtensionType::sub() const {
  auto hv = h();
  std::vector<i64> rest(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) rest[i] = r[i] - hv[i];
  return rank_one(rest, b);
}

bool exceptional_case(const Context& ctx, const ExtensionType& ext) {
  return ext.a == ext.b && necessary_map_conditions(ctx, ext.r, ext.J);
}

bool all_p_caveat(const Context& ctx, const ExtensionType& ext) {
  for (int i = 0; i < ctx.f; ++i)
    if (ext.r[i] != ctx.p || !ext.J.has(i)) return false;
  return true;
}

RankOneKisin twist_rank_one(const RankOneKisin& N, const std::vector<i64>& d, const FieldElem& c) {
  if (d.size() != N.r.size()) throw std::invalid_argument("twist length mismatch");
  if (c.is_zero()) throw std::invalid_argument("twist constant must be nonzero");
  std::vector<i64> r(N.r.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = N.r[i] + d[i];
  return {r, N.a * c};
}

}  // namespace swt
