#include "swt/irreducible.hpp"

#include <algorithm>
#include <stdexcept>

namespace swt {

using nlohmann::json;
using Vec = std::vector<i64>;

static void check_frame(const Context& ctx, IndexSet J) {
  if (J.n != 2 * ctx.f) throw std::invalid_argument("quadratic set must have 2f slots");
}

bool is_balanced(const Context& ctx, IndexSet J) {
  check_frame(ctx, J);
  for (int i = 0; i < ctx.f; ++i)
    if (J.has(i) == J.has(i + ctx.f)) return false;
  return true;
}

Vec quadratic_s(const Context& ctx, const HTTable& table, IndexSet J) {
  check_frame(ctx, J);
  Vec e(2 * ctx.f);
  for (int s = 0; s < 2 * ctx.f; ++s) e[s] = J.has(s) ? table[project(ctx, s)].b1 : table[project(ctx, s)].b2;
  return e;
}

Vec quadratic_t(const Context& ctx, const HTTable& table, IndexSet J) {
  return quadratic_s(ctx, table, J.complement());
}

i64 char2(const Context& ctx, const Vec& e) { return char_of_exponents(ctx, e, 2).exponent; }

bool induced_pair_condition(const Context& ctx, const HTTable& table, IndexSet J) {
  i64 s = char2(ctx, quadratic_s(ctx, table, J)), t = char2(ctx, quadratic_t(ctx, table, J));
  return s == mulmod(t, ctx.m1 + 1, ctx.m2);
}

IndexSet rebalance(const Context& ctx, const HTTable& table, IndexSet J) {
  check_frame(ctx, J);
  const int f = ctx.f;
  if (!induced_pair_condition(ctx, table, J)) throw std::invalid_argument("induced-pair condition fails");
  if (is_balanced(ctx, J)) return J;
  IndexSet out = J;
  Vec x(f, 0);
  std::vector<bool> equal(f, false);
  for (int i = 0; i < f; ++i) {
    equal[i] = table[i].b1 == table[i].b2;
    if (equal[i]) {
      out.set(i, false);
      out.set(i + f, false);
      continue;
    }
    bool lo = J.has(i), hi = J.has(i + f);
    if (lo && hi) x[i] = table[i].b1 - table[i].b2;
    else if (!lo && !hi) x[i] = table[i].b2 - table[i].b1;
  }
  auto dec = try_decompose_cyclic(ctx, x);
  if (!dec) throw std::logic_error("rebalance: defect vector does not decompose");
  if (dec->flag != 0) throw std::invalid_argument("rebalance: character is Frobenius-stable");
  for (const auto& str : dec->strings) {
    if (str.kind == StringKind::Zero) continue;
    for (int k = 0; k < str.length; ++k) out.set(str.begin + k, !out.has(str.begin + k));
  }
  for (int i = 0; i < f; ++i)
    if (equal[i]) out.set(i, true);
  if (!is_balanced(ctx, out)) throw std::logic_error("rebalance produced an unbalanced set");
  if (char2(ctx, quadratic_s(ctx, table, out)) != char2(ctx, quadratic_s(ctx, table, J)))
    throw std::logic_error("rebalance changed the character");
  return out;
}

static IndexSet realize(const Context& ctx, const HTTable& table, const Vec& e, const std::string& label) {
  const int f = ctx.f;
  IndexSet J = IndexSet::empty(2 * f);
  for (int i = 0; i < f; ++i) {
    const HTRow row = table[i];
    i64 lo = e[i], hi = e[i + f];
    if (lo == row.b1 && hi == row.b2) J.set(i);
    else if (lo == row.b2 && hi == row.b1) J.set(i + f);
    else throw std::logic_error("rewriting for " + label + " misses the table at " + std::to_string(i));
  }
  return J;
}

std::vector<IrrWitness> irr_forward(const Context& ctx, const WeightFamily& fam, IndexSet J) {
  if (!is_balanced(ctx, J)) throw std::invalid_argument("irr_forward needs a balanced set");
  const int f = ctx.f, n = 2 * f;
  const Vec base = quadratic_s(ctx, fam.b, J);
  const i64 xi = char2(ctx, base);

  // Walk the chain of h-shifts starting at the chosen lift of nu.
  auto shift_chain = [&](Vec& e, int sigma) {
    while (true) {
      e[sigma] -= 1;
      e[(sigma + 1) % n] += ctx.p;
      sigma = (sigma + 1) % n;
      if (!fam.M.has(project(ctx, sigma))) break;
    }
  };
  auto lift_of = [&](int nu, bool in_J) { return J.has(nu) == in_J ? nu : nu + f; };

  std::vector<IrrWitness> out;
  auto emit = [&](const std::string& label, const Weight& w, const HTTable& table, const Vec& e) {
    if (char2(ctx, e) != xi) throw std::logic_error("rewriting for " + label + " changed the character");
    IndexSet Jw = realize(ctx, table, e, label);
    out.push_back({label, w, table, e, Jw});
  };

  Vec e = base;
  for (int nu : fam.mus) shift_chain(e, lift_of(nu, true));
  emit("prime", fam.prime, fam.bprime, e);

  for (std::size_t j = 0; j < fam.mus.size(); ++j) {
    Vec em = base;
    for (int nu : fam.mus) shift_chain(em, lift_of(nu, nu != fam.mus[j]));
    emit("mu" + std::to_string(fam.mus[j]), fam.mu_weights[j], fam.bmu[j], em);
  }

  Vec et = base;
  for (int nu : fam.mus) shift_chain(et, lift_of(nu, false));
  emit("theta", fam.theta, fam.btheta, et);
  return out;
}

std::vector<IrrWitness> irr_forward(const Context& ctx, const std::vector<i64>& k, IndexSet J) {
  auto rep = validate_irregular(ctx, k);
  bool regular_only = !rep.valid() && std::all_of(rep.violations.begin(), rep.violations.end(),
                                                  [](const Violation& v) { return v.rule == Rule::Regular; });
  if (!regular_only) return irr_forward(ctx, make_family(ctx, k), J);
  if (!is_balanced(ctx, J)) throw std::invalid_argument("irr_forward needs a balanced set");
  Weight w = weight_of(k);
  HTTable table = ht_table(ctx, w);
  Vec e = quadratic_s(ctx, table, J);
  return {{"prime", w, table, e, J}, {"theta", w, table, e, J}};
}

static IndexSet irr_reconstruct(const Context& ctx, const WeightFamily& fam, IndexSet Jprime) {
  const int f = ctx.f;
  if (!is_balanced(ctx, Jprime)) throw std::invalid_argument("J' must be balanced");
  for (int nu : fam.mus) {
    const Block& b = fam.blocks.blocks[fam.blocks.block_of[nu]];
    for (int sigma : {nu, nu + f}) {
      bool head = Jprime.has(sigma);
      for (std::size_t k = 1; k <= b.tail.size(); ++k)
        if (Jprime.has((sigma + static_cast<int>(k)) % (2 * f)) != head)
          throw DichotomyError("tail lifts after " + std::to_string(sigma) + " split across J'");
    }
  }
  IndexSet J = IndexSet::empty(2 * f);
  for (int i = 0; i < f; ++i) {
    if (fam.J0.has(i)) {
      J.set(i);
      continue;
    }
    J.set(i, Jprime.has(i));
    J.set(i + f, Jprime.has(i + f));
  }
  if (char2(ctx, quadratic_s(ctx, fam.b, J)) != char2(ctx, quadratic_s(ctx, fam.bprime, Jprime)) ||
      char2(ctx, quadratic_t(ctx, fam.b, J)) != char2(ctx, quadratic_t(ctx, fam.bprime, Jprime)))
    throw std::logic_error("reconstructed J fails the niveau-2 congruences");
  return J;
}

static void require_aux(const Context& ctx, const HTTable& bprime, IndexSet Jprime, const HTTable& aux_table,
                        IndexSet aux, const std::string& label) {
  if (!is_balanced(ctx, aux)) throw std::invalid_argument(label + " must be balanced");
  if (char2(ctx, quadratic_s(ctx, bprime, Jprime)) != char2(ctx, quadratic_s(ctx, aux_table, aux)) ||
      char2(ctx, quadratic_t(ctx, bprime, Jprime)) != char2(ctx, quadratic_t(ctx, aux_table, aux)))
    throw DichotomyError("J' and " + label + " give different characters");
}

IndexSet irr_backward_theta(const Context& ctx, const WeightFamily& fam, IndexSet Jprime, IndexSet Jtheta) {
  if (!is_balanced(ctx, Jprime)) throw std::invalid_argument("J' must be balanced");
  check_frame(ctx, Jtheta);
  require_aux(ctx, fam.bprime, Jprime, fam.btheta, Jtheta, "J_theta");
  return irr_reconstruct(ctx, fam, Jprime);
}

IndexSet irr_backward_mus(const Context& ctx, const WeightFamily& fam, IndexSet Jprime,
                          const std::vector<IndexSet>& Jmu) {
  if (!is_balanced(ctx, Jprime)) throw std::invalid_argument("J' must be balanced");
  if (Jmu.size() != fam.mus.size()) throw std::invalid_argument("need one set per element of M-tilde");
  for (std::size_t j = 0; j < Jmu.size(); ++j) {
    check_frame(ctx, Jmu[j]);
    require_aux(ctx, fam.bprime, Jprime, fam.bmu[j], Jmu[j], "J_mu" + std::to_string(fam.mus[j]));
  }
  return irr_reconstruct(ctx, fam, Jprime);
}

static std::vector<IndexSet> balanced_sets(const Context& ctx) {
  std::vector<IndexSet> out;
  for (std::uint32_t m = 0; m < (1u << ctx.f); ++m) {
    IndexSet J = IndexSet::empty(2 * ctx.f);
    for (int i = 0; i < ctx.f; ++i) J.set((m >> i) & 1u ? i : i + ctx.f);
    out.push_back(J);
  }
  return out;
}

static AuditReport start_irr(const std::string& suite, const Context& ctx, const Vec& k) {
  AuditReport r;
  r.suite = suite;
  auto rep = validate_irregular(ctx, k);
  for (const auto& v : rep.violations) r.reason += (r.reason.empty() ? "" : "; ") + v.message;
  r.refused = !rep.valid();
  return r;
}

AuditReport irr_equivalence_audit(const Context& ctx, const Vec& k) {
  auto rep = start_irr("irr-equiv", ctx, k);
  if (rep.refused) return rep;
  auto fam = make_family(ctx, k);
  const i64 m = ctx.m2;
  auto exists_of = [&](const HTTable& table) {
    std::vector<char> bits(static_cast<std::size_t>(m), 0);
    for (IndexSet J : balanced_sets(ctx)) bits[char2(ctx, quadratic_s(ctx, table, J))] = 1;
    return bits;
  };
  auto E = exists_of(fam.b), Ep = exists_of(fam.bprime), Eth = exists_of(fam.btheta);
  std::vector<std::vector<char>> Emu;
  for (const auto& t : fam.bmu) Emu.push_back(exists_of(t));
  i64 with_shape = 0;
  for (i64 xi = 0; xi < m; ++xi) {
    if (!is_irreducible_pair(ctx, char_from_exponent(ctx, xi, 2))) continue;
    ++rep.units;
    bool irr = E[xi], via_theta = Ep[xi] && Eth[xi], via_mu = Ep[xi];
    for (const auto& e : Emu) via_mu = via_mu && e[xi];
    with_shape += irr;
    const i64 conj = mulmod(xi, ctx.m1 + 1, m);
    if (E[xi] != E[conj] || Ep[xi] != Ep[conj] || Eth[xi] != Eth[conj])
      rep.fail({{"k", k}, {"xi", xi}, {"conjugate", conj}, {"error", "shape existence not conjugation invariant"}});
    if (irr != via_theta || irr != via_mu)
      rep.fail({{"k", k}, {"xi", xi}, {"irregular", irr}, {"prime_and_theta", via_theta}, {"prime_and_all_mu", via_mu}});
  }
  rep.stats["exponents_with_shape"] = with_shape;

  // Forward rewritings and backward reconstruction on every balanced J.
  for (IndexSet J : balanced_sets(ctx)) {
    ++rep.units;
    try {
      auto ws = irr_forward(ctx, fam, J);
      IndexSet Jp = ws.front().J, Jth = ws.back().J;
      std::vector<IndexSet> Jmu;
      for (std::size_t j = 1; j + 1 < ws.size(); ++j) Jmu.push_back(ws[j].J);
      for (IndexSet back : {irr_backward_theta(ctx, fam, Jp, Jth), irr_backward_mus(ctx, fam, Jp, Jmu)}) {
        bool ok = is_balanced(ctx, back) && char2(ctx, quadratic_s(ctx, fam.b, back)) == char2(ctx, quadratic_s(ctx, fam.b, J));
        for (int s = 0; s < 2 * ctx.f; ++s)
          if (!fam.J0.has(project(ctx, s))) ok = ok && back.has(s) == J.has(s);
        if (!ok) rep.fail({{"k", k}, {"J", J.members()}, {"backward", back.members()}});
      }
    } catch (const std::exception& e) {
      rep.fail({{"k", k}, {"J", J.members()}, {"error", e.what()}});
    }
  }
  return rep;
}

AuditReport rebalance_audit(const Context& ctx, const Vec& k) {
  auto rep = start_irr("rebalance", ctx, k);
  if (rep.refused) return rep;
  auto fam = make_family(ctx, k);
  std::vector<const HTTable*> tables{&fam.b, &fam.bprime, &fam.btheta};
  for (const auto& t : fam.bmu) tables.push_back(&t);
  i64 stable_skipped = 0;
  for (const HTTable* table : tables)
    for (std::uint32_t m = 0; m < (1u << (2 * ctx.f)); ++m) {
      IndexSet J(2 * ctx.f, m);
      if (!induced_pair_condition(ctx, *table, J)) continue;
      i64 xi = char2(ctx, quadratic_s(ctx, *table, J));
      if (!is_irreducible_pair(ctx, char_from_exponent(ctx, xi, 2))) {
        ++stable_skipped;
        continue;
      }
      ++rep.units;
      try {
        IndexSet out = rebalance(ctx, *table, J);
        if (!is_balanced(ctx, out) || char2(ctx, quadratic_s(ctx, *table, out)) != xi)
          rep.fail({{"k", k}, {"J", J.members()}, {"out", out.members()}});
        if (is_balanced(ctx, J) && !(out == J)) rep.fail({{"k", k}, {"J", J.members()}, {"error", "balanced input moved"}});
      } catch (const std::exception& e) {
        rep.fail({{"k", k}, {"J", J.members()}, {"error", e.what()}});
      }
    }
  rep.stats["frobenius_stable_inputs"] = stable_skipped;
  return rep;
}

}  // namespace swt
