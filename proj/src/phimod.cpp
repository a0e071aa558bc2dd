#include "swt/phimod.hpp"

#include <stdexcept>

namespace swt {

bool PhiExtension::operator==(const PhiExtension& o) const {
  return sub.r == o.sub.r && sub.a == o.sub.a && quot.r == o.quot.r && quot.a == o.quot.a && x == o.x &&
         exceptional == o.exceptional;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11, m10 * o.m00 + m11 * o.m10,
          m10 * o.m01 + m11 * o.m11};
}

bool Mat2::operator==(const Mat2& o) const { return m00 == o.m00 && m01 == o.m01 && m10 == o.m10 && m11 == o.m11; }

FieldElem slot_constant(const FieldElem& a, int i) { return i == 0 ? a : FieldElem::one(a.spec()); }

static UPoly rank_one_entry(const RankOneKisin& N, int i) {
  return UPoly::monomial(slot_constant(N.a, i), static_cast<int>(N.r[i]));
}

Mat2 phi_matrix(const PhiExtension& M, int i) {
  auto F = M.sub.a.spec();
  return {rank_one_entry(M.sub, i), M.x[i], UPoly(F), rank_one_entry(M.quot, i)};
}

Mat2 poly_phi(const Mat2& m) { return {poly_phi(m.m00), poly_phi(m.m01), poly_phi(m.m10), poly_phi(m.m11)}; }

PhiExtension make_extension(RankOneKisin sub, RankOneKisin quot, std::vector<UPoly> x) {
  if (sub.r.size() != quot.r.size() || x.size() != sub.r.size())
    throw std::invalid_argument("extension data has mismatched lengths");
  for (std::size_t i = 0; i < sub.r.size(); ++i)
    if (sub.r[i] < 0 || quot.r[i] < 0) throw std::invalid_argument("negative exponent in phi-module");
  if (sub.a.is_zero() || quot.a.is_zero()) throw std::invalid_argument("zero rank-one constant");
  return {std::move(sub), std::move(quot), std::move(x), false};
}

PhiExtension build_extension(const Context& ctx, const ExtensionType& type, std::vector<UPoly> x, bool exceptional) {
  if (static_cast<int>(x.size()) != ctx.f) throw std::invalid_argument("parameter vector must have length f");
  if (exceptional && !exceptional_case(ctx, type))
    throw std::invalid_argument("exceptional flag on a non-exceptional type");
  int degree_p_terms = 0;
  for (int i = 0; i < ctx.f; ++i) {
    const UPoly& xi = x[i];
    if (xi.is_zero()) continue;
    if (!type.J.has(i) || type.r[i] == 0) {
      bool allowed = exceptional && type.r[i] == 0;
      if (!allowed) throw std::invalid_argument("parameter must vanish off J and where r_i = 0");
    }
    if (xi.degree() == 0) continue;
    bool degree_p = exceptional && xi.degree() == ctx.p;
    for (int j = 1; j < xi.degree(); ++j) degree_p = degree_p && xi.coeff(j).is_zero();
    if (!degree_p) throw std::invalid_argument("parameter must be constant");
    ++degree_p_terms;
  }
  if (degree_p_terms > 1) throw std::invalid_argument("at most one degree-p parameter");
  auto M = make_extension(type.sub(), type.quotient(), std::move(x));
  M.exceptional = exceptional;
  return M;
}

bool check_phi_morphism(const Context& ctx, const PhiMorphism& g, const PhiExtension& src, const PhiExtension& dst) {
  if (static_cast<int>(g.G.size()) != ctx.f) return false;
  for (int i = 0; i < ctx.f; ++i) {
    const Mat2& prev = g.G[mod(i - 1, ctx.f)];
    if (!(g.G[i] * phi_matrix(src, i) == phi_matrix(dst, i) * poly_phi(prev))) return false;
  }
  return true;
}

bool generically_invertible(const PhiMorphism& g) {
  for (const auto& m : g.G)
    if (m.det().is_zero()) return false;
  return true;
}

static UPoly u_pow(const FieldPtr& F, i64 e) {
  if (e < 0) throw std::domain_error("negative power of u");
  return UPoly::monomial(FieldElem::one(F), static_cast<int>(e));
}

static Mat2 diag(const FieldPtr& F, i64 e0, i64 e1) { return {u_pow(F, e0), UPoly(F), UPoly(F), u_pow(F, e1)}; }

ForwardTransport transport_forward(const Context& ctx, const PhiExtension& M, const RankOneKisin& Nprime,
                                   const RankOneKisin& Pprime) {
  if (!hom_exists(ctx, M.sub, Pprime)) throw std::domain_error("no map from the sub to P'");
  if (!hom_exists(ctx, M.quot, Nprime)) throw std::domain_error("no map from the quotient to N'");
  auto F = M.sub.a.spec();
  std::vector<UPoly> xp;
  PhiMorphism g;
  for (int i = 0; i < ctx.f; ++i) {
    i64 aP = alpha_int(ctx, M.sub.r, Pprime.r, i);
    i64 aN = alpha_int(ctx, M.quot.r, Nprime.r, i);
    if (!M.x[i].is_zero() && alpha_int(ctx, M.quot.r, Nprime.r, mod(i - 1, ctx.f)) != 0)
      throw std::domain_error("parameter does not transport: alpha_{i-1}(N,N') != 0");
    xp.push_back(M.x[i] * u_pow(F, aP));
    g.G.push_back(diag(F, aP, aN));
  }
  return {make_extension(Pprime, Nprime, xp), g};
}

ReverseTransport transport_reverse(const Context& ctx, const PhiExtension& M, const RankOneKisin& Nprime,
                                   const RankOneKisin& Pprime) {
  if (!hom_exists(ctx, M.sub, Pprime)) throw std::domain_error("no map from the sub to P'");
  if (!hom_exists(ctx, Nprime, M.quot)) throw std::domain_error("no map from N' to the quotient");
  auto F = M.sub.a.spec();
  std::vector<UPoly> yp, z;
  PhiMorphism g1, g2;
  for (int i = 0; i < ctx.f; ++i) {
    if (M.x[i].degree() > 1) throw std::domain_error("reverse transport needs parameters of degree <= 1");
    i64 aP = alpha_int(ctx, M.sub.r, Pprime.r, i);
    i64 aN = alpha_int(ctx, Nprime.r, M.quot.r, i);
    i64 aNprev = alpha_int(ctx, Nprime.r, M.quot.r, mod(i - 1, ctx.f));
    yp.push_back(M.x[i] * u_pow(F, aP + ctx.p * aNprev));
    z.push_back(M.x[i] * u_pow(F, aP));
    g1.G.push_back(diag(F, aP, 0));
    g2.G.push_back(diag(F, 0, aN));
  }
  return {make_extension(Pprime, Nprime, yp), make_extension(Pprime, M.quot, z), g1, g2};
}

PhiExtension twist_extension(const PhiExtension& M, const std::vector<i64>& d, const FieldElem& c) {
  auto sub = twist_rank_one(M.sub, d, c);
  auto quot = twist_rank_one(M.quot, d, c);
  auto F = c.spec();
  std::vector<UPoly> x;
  for (std::size_t i = 0; i < d.size(); ++i)
    x.push_back(M.x[i] * u_pow(F, d[i]) * slot_constant(c, static_cast<int>(i)));
  auto out = make_extension(sub, quot, x);
  out.exceptional = M.exceptional;
  return out;
}

}  // namespace swt
