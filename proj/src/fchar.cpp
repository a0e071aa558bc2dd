#include "swt/fchar.hpp"

#include <stdexcept>

namespace swt {

i64 niveau_modulus(const Context& ctx, int niveau) {
  if (niveau == 1) return ctx.m1;
  if (niveau == 2) return ctx.m2;
  throw std::invalid_argument("niveau must be 1 or 2");
}

InertialChar char_of_exponents(const Context& ctx, const std::vector<i64>& r, int niveau) {
  const i64 m = niveau_modulus(ctx, niveau);
  const int len = niveau * ctx.f;
  if (static_cast<int>(r.size()) != len) throw std::invalid_argument("exponent vector has wrong length");
  i64 e = 0;
  for (int i = 0; i < len; ++i) e = mod(e + mulmod(mod(r[i], m), powmod(ctx.p, len - 1 - i, m), m), m);
  return {niveau, e, m};
}

InertialChar char_from_exponent(const Context& ctx, i64 e, int niveau) {
  const i64 m = niveau_modulus(ctx, niveau);
  return {niveau, mod(e, m), m};
}

static void same_niveau(const InertialChar& a, const InertialChar& b) {
  if (a.niveau != b.niveau || a.modulus != b.modulus) throw std::invalid_argument("niveau mismatch");
}

InertialChar char_mul(const InertialChar& a, const InertialChar& b) {
  same_niveau(a, b);
  return {a.niveau, mod(a.exponent + b.exponent, a.modulus), a.modulus};
}

InertialChar char_inv(const InertialChar& a) { return {a.niveau, mod(-a.exponent, a.modulus), a.modulus}; }

bool char_eq(const InertialChar& a, const InertialChar& b) {
  same_niveau(a, b);
  return a.exponent == b.exponent;
}

InertialChar extend_to_quadratic(const Context& ctx, const InertialChar& chi) {
  if (chi.niveau != 1) throw std::invalid_argument("extend_to_quadratic expects niveau 1");
  i64 scale = ctx.m1 + 2;  // p^f + 1
  return {2, mulmod(chi.exponent, scale, ctx.m2), ctx.m2};
}

bool is_irreducible_pair(const Context& ctx, const InertialChar& chi) {
  if (chi.niveau != 2) throw std::invalid_argument("is_irreducible_pair expects niveau 2");
  return mulmod(chi.exponent, ctx.m1 + 1, ctx.m2) != chi.exponent;
}

bool SemisimpleShape::operator==(const SemisimpleShape& o) const {
  return (char_eq(a, o.a) && char_eq(b, o.b)) || (char_eq(a, o.b) && char_eq(b, o.a));
}

}  // namespace swt
