#include "swt/matching.hpp"

#include <set>

#include "swt/phimod.hpp"

namespace swt {

using nlohmann::json;
using Vec = std::vector<i64>;

void AuditReport::absorb(const AuditReport& other) {
  units += other.units;
  if (other.failures > 0 && failures == 0) counterexample = other.counterexample;
  failures += other.failures;
  if (other.refused) {
    refused = true;
    reason = other.reason;
  }
}

AuditReport refused_report(const std::string& suite, const std::string& reason) {
  AuditReport r;
  r.suite = suite;
  r.refused = true;
  r.reason = reason;
  return r;
}

std::vector<IndexSet> shape_search(const Context& ctx, const InertialChar& chi1, const InertialChar& chi2,
                                   const HTTable& table) {
  std::vector<IndexSet> out;
  for (std::uint32_t m = 0; m < (1u << ctx.f); ++m) {
    IndexSet J(ctx.f, m);
    auto [s, t] = st_sequences(table, J);
    if (char_eq(char_of_exponents(ctx, s), chi1) && char_eq(char_of_exponents(ctx, t), chi2)) out.push_back(J);
  }
  return out;
}

bool semisimple_decide(const Context& ctx, const SemisimpleShape& shape, const Weight& w) {
  auto table = ht_table(ctx, w);
  return !shape_search(ctx, shape.a, shape.b, table).empty() || !shape_search(ctx, shape.b, shape.a, table).empty();
}

bool check_congruence(const Context& ctx, const Vec& a, const Vec& b, i64 modulus) {
  if (a.size() != b.size()) throw std::invalid_argument("congruence operands differ in length");
  const int n = static_cast<int>(a.size());
  i64 acc = 0;
  for (int i = 0; i < n; ++i) acc = mod(acc + mulmod(a[i] - b[i], powmod(ctx.p, n - 1 - i, modulus), modulus), modulus);
  return acc == 0;
}

static IndexSet with_tail(IndexSet S, const Block& b, bool in) {
  for (int t : b.tail) S.set(t, in);
  return S;
}

ForwardSets forward_sets(const Context& ctx, const WeightFamily& fam, IndexSet J) {
  if (J.n != ctx.f) throw std::invalid_argument("J has the wrong size");
  ForwardSets out;
  IndexSet base = J - fam.J0;
  out.Jprime = base;
  out.Jtheta = base;
  for (const auto& b : fam.blocks.blocks) {
    out.Jprime = with_tail(out.Jprime, b, J.has(b.nu));
    out.Jtheta = with_tail(out.Jtheta, b, !J.has(b.nu));
  }
  for (int mu : fam.mus) {
    IndexSet S = out.Jprime;
    const Block& b = fam.blocks.blocks[fam.blocks.block_of[mu]];
    out.Jmu.push_back(with_tail(S, b, !J.has(mu)));
  }
  return out;
}

std::vector<CongruenceCheck> forward_congruences(const Context& ctx, const WeightFamily& fam, IndexSet J,
                                                 const ForwardSets& sets) {
  std::vector<CongruenceCheck> out;
  auto [s, t] = st_sequences(fam.b, J);
  auto [sp, tp] = st_sequences(fam.bprime, sets.Jprime);
  auto [sth, tth] = st_sequences(fam.btheta, sets.Jtheta);
  const i64 m = ctx.m1;
  out.push_back({"s~s'", check_congruence(ctx, s, sp, m)});
  out.push_back({"t~t'", check_congruence(ctx, t, tp, m)});
  out.push_back({"s~s_theta", check_congruence(ctx, s, sth, m)});
  out.push_back({"t~t_theta", check_congruence(ctx, t, tth, m)});
  out.push_back({"s'~s_theta", check_congruence(ctx, sp, sth, m)});
  out.push_back({"t'~t_theta", check_congruence(ctx, tp, tth, m)});
  for (std::size_t j = 0; j < fam.mus.size(); ++j) {
    auto [smu, tmu] = st_sequences(fam.bmu[j], sets.Jmu[j]);
    std::string tag = "_mu" + std::to_string(fam.mus[j]);
    out.push_back({"s~s" + tag, check_congruence(ctx, s, smu, m)});
    out.push_back({"t~t" + tag, check_congruence(ctx, t, tmu, m)});
    out.push_back({"s'~s" + tag, check_congruence(ctx, sp, smu, m)});
    out.push_back({"t'~t" + tag, check_congruence(ctx, tp, tmu, m)});
  }
  return out;
}

static void check_block(const Block& b, IndexSet Jprime, IndexSet aux) {
  bool first = Jprime.has(b.nu), second = !Jprime.has(b.nu);
  for (int t : b.tail) {
    first = first && Jprime.has(t) && !aux.has(t);
    second = second && !Jprime.has(t) && aux.has(t);
  }
  if (!first && !second)
    throw DichotomyError("dichotomy violated in the block of " + std::to_string(b.nu) + ": J'=" + Jprime.str() +
                         ", aux=" + aux.str());
}

static IndexSet reconstruct(const Context& ctx, const WeightFamily& fam, IndexSet Jprime) {
  IndexSet J = Jprime - fam.J0;
  auto [s, t] = st_sequences(fam.b, J);
  auto [sp, tp] = st_sequences(fam.bprime, Jprime);
  if (!check_congruence(ctx, s, sp, ctx.m1) || !check_congruence(ctx, t, tp, ctx.m1))
    throw std::logic_error("reconstructed J fails the irregular congruences");
  return J;
}

IndexSet backward_from_theta(const Context& ctx, const WeightFamily& fam, IndexSet Jprime, IndexSet Jtheta) {
  if (Jprime.n != ctx.f || Jtheta.n != ctx.f) throw std::invalid_argument("set has the wrong size");
  for (const auto& b : fam.blocks.blocks) check_block(b, Jprime, Jtheta);
  auto [sp, tp] = st_sequences(fam.bprime, Jprime);
  auto [sth, tth] = st_sequences(fam.btheta, Jtheta);
  if (!check_congruence(ctx, sp, sth, ctx.m1) || !check_congruence(ctx, tp, tth, ctx.m1))
    throw DichotomyError("J' and J_theta give different characters");
  return reconstruct(ctx, fam, Jprime);
}

IndexSet backward_from_mus(const Context& ctx, const WeightFamily& fam, IndexSet Jprime,
                           const std::vector<IndexSet>& Jmu) {
  if (Jmu.size() != fam.mus.size()) throw std::invalid_argument("need one set per element of M-tilde");
  auto [sp, tp] = st_sequences(fam.bprime, Jprime);
  for (std::size_t j = 0; j < fam.mus.size(); ++j) {
    if (Jmu[j].n != ctx.f) throw std::invalid_argument("set has the wrong size");
    check_block(fam.blocks.blocks[fam.blocks.block_of[fam.mus[j]]], Jprime, Jmu[j]);
    auto [smu, tmu] = st_sequences(fam.bmu[j], Jmu[j]);
    if (!check_congruence(ctx, sp, smu, ctx.m1) || !check_congruence(ctx, tp, tmu, ctx.m1))
      throw DichotomyError("J' and J_mu" + std::to_string(fam.mus[j]) + " give different characters");
  }
  return reconstruct(ctx, fam, Jprime);
}

SubspaceDim subspace_dim(const SubspaceDescriptor& desc) {
  SubspaceDim d;
  d.dim = (desc.J - desc.J0).size() + (desc.equal_characters ? 1 : 0);
  d.count = ipow(desc.field_size, d.dim);
  return d;
}

// ---------------------------------------------------------------------------

namespace {

json set_json(IndexSet S) { return S.members(); }

std::vector<IndexSet> all_subsets(int f) {
  std::vector<IndexSet> out;
  for (std::uint32_t m = 0; m < (1u << f); ++m) out.emplace_back(f, m);
  return out;
}

Vec indicator(int f, IndexSet S) {
  Vec v(f, 0);
  for (int i : S.members()) v[i] = 1;
  return v;
}

Vec plus(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

AuditReport start(const std::string& suite, const Context& ctx, const Vec& k) {
  AuditReport r;
  r.suite = suite;
  auto rep = validate_irregular(ctx, k);
  if (!rep.valid()) {
    r.refused = true;
    for (const auto& v : rep.violations) r.reason += (r.reason.empty() ? "" : "; ") + v.message;
  }
  return r;
}

}  // namespace

AuditReport congruence_audit(const Context& ctx, const Vec& k) {
  auto rep = start("congruences", ctx, k);
  if (rep.refused) return rep;
  auto fam = make_family(ctx, k);
  for (IndexSet J : all_subsets(ctx.f)) {
    ++rep.units;
    auto sets = forward_sets(ctx, fam, J);
    for (const auto& c : forward_congruences(ctx, fam, J, sets))
      if (!c.holds) rep.fail({{"k", k}, {"J", set_json(J)}, {"congruence", c.name}});
    try {
      IndexSet back_theta = backward_from_theta(ctx, fam, sets.Jprime, sets.Jtheta);
      IndexSet back_mu = backward_from_mus(ctx, fam, sets.Jprime, sets.Jmu);
      if (back_theta - fam.J0 != J - fam.J0 || back_mu - fam.J0 != J - fam.J0)
        rep.fail({{"k", k}, {"J", set_json(J)}, {"roundtrip", set_json(back_theta)}});
    } catch (const std::exception& e) {
      rep.fail({{"k", k}, {"J", set_json(J)}, {"error", e.what()}});
    }
  }
  return rep;
}

AuditReport alpha_table_audit(const Context& ctx, const Vec& k) {
  auto rep = start("alpha-tables", ctx, k);
  if (rep.refused) return rep;
  auto fam = make_family(ctx, k);
  const int f = ctx.f;
  IndexSet J0 = fam.J0, Mt = fam.Mt;
  auto next0 = [&](int i) { return J0.has(i + 1); };
  i64 compared = 0;

  auto compare = [&](const char* table, IndexSet J, int mu, const Vec& a, const Vec& b, auto expected) {
    for (int i = 0; i < f; ++i) {
      ++compared;
      Rational got = alpha_seq(ctx, a, i) - alpha_seq(ctx, b, i);
      i64 want = expected(i) ? 1 : 0;
      if (got != Rational(want))
        rep.fail({{"k", k}, {"J", set_json(J)}, {"table", table}, {"mu", mu}, {"i", i},
                  {"alpha", std::to_string(got.numerator()) + "/" + std::to_string(got.denominator())},
                  {"expected", want}});
    }
  };

  for (IndexSet J : all_subsets(f)) {
    ++rep.units;
    auto sets = forward_sets(ctx, fam, J);
    IndexSet Jp = sets.Jprime, Jth = sets.Jtheta;
    auto [s, t] = st_sequences(fam.b, J);
    auto [sp, tp] = st_sequences(fam.bprime, Jp);
    auto [sth, tth] = st_sequences(fam.btheta, Jth);

    compare("s'-s", J, -1, sp, s, [&](int i) { return (Mt.has(i) && Jp.has(i)) || (J0.has(i) && Jp.has(i) && next0(i)); });
    compare("t'-t", J, -1, tp, t, [&](int i) { return (Mt.has(i) && !Jp.has(i)) || (J0.has(i) && !Jp.has(i) && next0(i)); });
    compare("s_theta-s", J, -1, sth, s,
            [&](int i) { return (Mt.has(i) && !Jth.has(i)) || (J0.has(i) && Jth.has(i) && next0(i)); });
    compare("t_theta-t", J, -1, tth, t,
            [&](int i) { return (Mt.has(i) && Jth.has(i)) || (J0.has(i) && !Jth.has(i) && next0(i)); });

    for (std::size_t j = 0; j < fam.mus.size(); ++j) {
      const int mu = fam.mus[j];
      IndexSet Jm = sets.Jmu[j];
      auto [smu, tmu] = st_sequences(fam.bmu[j], Jm);
      compare("s_mu-s", J, mu, smu, s, [&](int i) {
        return (Mt.has(i) && i != mu && Jm.has(i)) || (i == mu && !Jm.has(i)) || (J0.has(i) && Jm.has(i) && next0(i));
      });
      compare("t_mu-t", J, mu, tmu, t, [&](int i) {
        return (Mt.has(i) && i != mu && !Jm.has(i)) || (i == mu && Jm.has(i)) || (J0.has(i) && !Jm.has(i) && next0(i));
      });
      if (Jp.has(mu)) {
        const Block& blk = fam.blocks.blocks[fam.blocks.block_of[mu]];
        auto in_block_tail = [&](int i) {
          for (int x : blk.tail)
            if (x == i) return true;
          return false;
        };
        auto row = [&](int i) { return i == mu || (in_block_tail(i) && next0(i)); };
        compare("s'-s_mu", J, mu, sp, smu, row);
        compare("t_mu-t'", J, mu, tmu, tp, row);
      }
    }

    Vec sg(f), tg(f);
    for (int i = 0; i < f; ++i) {
      sg[i] = Jp.has(i) ? sp[i] : sth[i];
      tg[i] = Jp.has(i) ? tp[i] : tth[i];
    }
    auto in_row = [&](int i) { return Jp.has(i) && next0(i); };
    auto out_row = [&](int i) { return !Jp.has(i) && next0(i); };
    compare("s_gamma-s_theta", J, -1, sg, sth, in_row);
    compare("t_theta-t_gamma", J, -1, tth, tg, in_row);
    compare("s_gamma-s'", J, -1, sg, sp, out_row);
    compare("t'-t_gamma", J, -1, tp, tg, out_row);
  }
  rep.stats["alpha_values_compared"] = compared;
  return rep;
}

AuditReport exceptional_audit(const Context& ctx, const Vec& k) {
  auto rep = start("exceptional", ctx, k);
  if (rep.refused) return rep;
  auto fam = make_family(ctx, k);
  const int f = ctx.f;
  auto F = make_field(ctx.p, 1);
  auto one = FieldElem::one(F);
  auto gaps = [&](const HTTable& t) {
    Vec r;
    for (auto row : t) r.push_back(row.b1 - row.b2);
    return r;
  };
  auto consistent = [&](const Block& b, IndexSet S) {
    bool all_in = true, all_out = true;
    for (int t : b.tail) all_in = all_in && S.has(t), all_out = all_out && !S.has(t);
    return S.has(b.nu) ? all_in : all_out;
  };
  auto opposite = [&](const Block& b, IndexSet S) {
    bool all_in = true, all_out = true;
    for (int t : b.tail) all_in = all_in && S.has(t), all_out = all_out && !S.has(t);
    return S.has(b.nu) ? all_out : all_in;
  };
  i64 unconstrained = 0;
  auto scan = [&](const std::string& weight, const Vec& r, auto constraint) {
    for (IndexSet S : all_subsets(f)) {
      bool exc = exceptional_case(ctx, {r, one, one, S});
      if (exc) ++unconstrained;
      if (!constraint(S)) continue;
      ++rep.units;
      if (exc) rep.fail({{"k", k}, {"weight", weight}, {"r", r}, {"J", set_json(S)}});
    }
  };
  scan("irregular", gaps(fam.b), [](IndexSet) { return true; });
  scan("prime", gaps(fam.bprime), [&](IndexSet S) {
    for (const auto& b : fam.blocks.blocks)
      if (!consistent(b, S)) return false;
    return true;
  });
  for (std::size_t j = 0; j < fam.mus.size(); ++j) {
    const Block& blk = fam.blocks.blocks[fam.blocks.block_of[fam.mus[j]]];
    scan("mu" + std::to_string(fam.mus[j]), gaps(fam.bmu[j]), [&](IndexSet S) { return opposite(blk, S); });
  }
  scan("theta", gaps(fam.btheta), [&](IndexSet S) {
    for (const auto& b : fam.blocks.blocks)
      if (!opposite(b, S)) return false;
    return true;
  });
  rep.stats["exceptional_without_constraints"] = unconstrained;
  return rep;
}

AuditReport semisimple_equivalence_audit(const Context& ctx, const Vec& k) {
  auto rep = start("semisimple-equiv", ctx, k);
  if (rep.refused) return rep;
  auto fam = make_family(ctx, k);
  const i64 m = ctx.m1;
  auto pairs_of = [&](const HTTable& table) {
    std::vector<char> bits(static_cast<std::size_t>(m * m), 0);
    for (IndexSet J : all_subsets(ctx.f)) {
      auto [s, t] = st_sequences(table, J);
      i64 a = char_of_exponents(ctx, s).exponent, b = char_of_exponents(ctx, t).exponent;
      bits[a * m + b] = bits[b * m + a] = 1;
    }
    return bits;
  };
  auto D = pairs_of(fam.b), Dp = pairs_of(fam.bprime), Dth = pairs_of(fam.btheta);
  std::vector<std::vector<char>> Dmu;
  for (const auto& t : fam.bmu) Dmu.push_back(pairs_of(t));
  i64 liftable = 0;
  for (i64 a = 0; a < m; ++a)
    for (i64 b = 0; b < m; ++b) {
      ++rep.units;
      std::size_t idx = a * m + b;
      bool irr = D[idx], via_theta = Dp[idx] && Dth[idx], via_mu = Dp[idx];
      for (const auto& d : Dmu) via_mu = via_mu && d[idx];
      liftable += irr;
      if (irr != via_theta || irr != via_mu)
        rep.fail({{"k", k}, {"chi1", a}, {"chi2", b}, {"irregular", irr}, {"prime_and_theta", via_theta},
                  {"prime_and_all_mu", via_mu}});
    }
  rep.stats["pairs_with_shape"] = liftable;
  return rep;
}

AuditReport subspace_transport_audit(const Context& ctx, const Vec& k) {
  auto rep = start("transport", ctx, k);
  if (rep.refused) return rep;
  auto fam = make_family(ctx, k);
  const int f = ctx.f;
  auto F = make_field(ctx.p, ctx.d);
  auto units = field_units(F);
  auto elems = field_elements(F);
  auto one = FieldElem::one(F);
  const Vec d = indicator(f, fam.Mt);
  i64 morphisms = 0, families = 0;

  auto params_on = [&](IndexSet S) {
    std::vector<std::vector<UPoly>> out;
    auto idx = S.members();
    i64 total = ipow(static_cast<i64>(elems.size()), static_cast<int>(idx.size()));
    for (i64 code = 0; code < total; ++code) {
      std::vector<UPoly> x(f, UPoly(F));
      i64 c = code;
      for (int i : idx) {
        x[i] = UPoly::constant(elems[c % elems.size()]);
        c /= static_cast<i64>(elems.size());
      }
      out.push_back(x);
    }
    return out;
  };
  auto morphism_ok = [&](const PhiMorphism& g, const PhiExtension& src, const PhiExtension& dst) {
    ++morphisms;
    return check_phi_morphism(ctx, g, src, dst) && generically_invertible(g);
  };
  auto gap_vec = [&](const HTTable& t) {
    Vec r;
    for (auto row : t) r.push_back(row.b1 - row.b2);
    return r;
  };

  for (IndexSet J : all_subsets(f)) {
    auto sets = forward_sets(ctx, fam, J);
    auto [s, t] = st_sequences(fam.b, J);
    auto [sp, tp] = st_sequences(fam.bprime, sets.Jprime);
    auto [sth, tth] = st_sequences(fam.btheta, sets.Jtheta);
    IndexSet support = J - fam.J0;
    auto family = params_on(support);
    const i64 expected_count = subspace_dim({J, fam.J0, false, static_cast<i64>(elems.size())}).count;

    for (const auto& a : units)
      for (const auto& b : units) {
        json where = {{"k", k}, {"J", set_json(J)}, {"a", a.str()}, {"b", b.str()}};
        ExtensionType irr_type{gap_vec(fam.b), a, b, J};
        if (a == b) {
          bool exc = exceptional_case(ctx, {gap_vec(fam.bprime), a, b, sets.Jprime}) ||
                     exceptional_case(ctx, {gap_vec(fam.btheta), a, b, sets.Jtheta});
          for (std::size_t j = 0; j < fam.mus.size(); ++j)
            exc = exc || exceptional_case(ctx, {gap_vec(fam.bmu[j]), a, b, sets.Jmu[j]});
          if (exc) {
            rep.fail({{"where", where}, {"error", "exceptional configuration encountered"}});
            continue;
          }
        }
        auto irregular = [&](const std::vector<UPoly>& x) { return build_extension(ctx, irr_type, x); };

        // Regular-side families mapped forward onto the irregular side.
        auto forward_family = [&](const std::string& label, const Vec& src_s, const Vec& src_t, const Vec& twist) {
          std::set<std::string> images;
          for (const auto& x : family) {
            ++rep.units;
            try {
              auto src = make_extension(rank_one(src_t, b), rank_one(src_s, a), x);
              auto tr = transport_forward(ctx, src, rank_one(plus(s, twist), a), rank_one(plus(t, twist), b));
              auto expect = twist_extension(irregular(x), twist, one);
              if (!(tr.target == expect)) rep.fail({{"where", where}, {"direction", label}, {"error", "parameter mismatch"}});
              if (!morphism_ok(tr.map, src, tr.target))
                rep.fail({{"where", where}, {"direction", label}, {"error", "morphism check failed"}});
              std::string key;
              for (const auto& xi : tr.target.x) key += xi.str() + "|";
              images.insert(key);
            } catch (const std::exception& e) {
              rep.fail({{"where", where}, {"direction", label}, {"error", e.what()}});
            }
          }
          ++families;
          if (static_cast<i64>(images.size()) != expected_count || static_cast<i64>(family.size()) != expected_count)
            rep.fail({{"where", where}, {"direction", label}, {"error", "transport is not a bijection"},
                      {"images", images.size()}, {"expected", expected_count}});
        };
        forward_family("prime", sp, tp, Vec(f, 0));
        for (std::size_t j = 0; j < fam.mus.size(); ++j) {
          auto [smu, tmu] = st_sequences(fam.bmu[j], sets.Jmu[j]);
          Vec e = indicator(f, IndexSet::of(f, {fam.mus[j]}));
          forward_family("mu" + std::to_string(fam.mus[j]), plus(smu, e), plus(tmu, e), e);
        }
        forward_family("theta", plus(sth, d), plus(tth, d), d);

        // Reverse maps through the twisted regular modules.
        auto reverse_family = [&](const std::string& label, IndexSet free, const Vec& src_s, const Vec& src_t,
                                  const Vec& src_twist, const Vec& dst_s, const Vec& dst_t, const Vec& expect_twist) {
          for (const auto& x : params_on(free)) {
            ++rep.units;
            try {
              auto src = twist_extension(make_extension(rank_one(src_t, b), rank_one(src_s, a), x), src_twist, one);
              auto tr = transport_reverse(ctx, src, rank_one(plus(dst_s, d), a), rank_one(plus(dst_t, d), b));
              auto base_s = dst_s, base_t = dst_t;
              for (int i = 0; i < f; ++i) base_s[i] += d[i] - expect_twist[i], base_t[i] += d[i] - expect_twist[i];
              auto expect =
                  twist_extension(make_extension(rank_one(base_t, b), rank_one(base_s, a), x), expect_twist, one);
              if (!(tr.target == expect)) rep.fail({{"where", where}, {"direction", label}, {"error", "parameter mismatch"}});
              if (!morphism_ok(tr.from_source, src, tr.middle) || !morphism_ok(tr.from_target, tr.target, tr.middle))
                rep.fail({{"where", where}, {"direction", label}, {"error", "morphism check failed"}});
            } catch (const std::exception& e) {
              rep.fail({{"where", where}, {"direction", label}, {"error", e.what()}});
            }
          }
          ++families;
        };
        for (std::size_t j = 0; j < fam.mus.size(); ++j) {
          const int mu = fam.mus[j];
          if (!sets.Jprime.has(mu)) continue;
          auto [smu, tmu] = st_sequences(fam.bmu[j], sets.Jmu[j]);
          Vec e = indicator(f, IndexSet::of(f, {mu}));
          Vec g = indicator(f, fam.Mt.with(mu, false));
          reverse_family("mu" + std::to_string(mu) + "->prime", sets.Jmu[j], plus(smu, e), plus(tmu, e), g, sp, tp, d);
        }
        Vec sg(f), tg(f);
        for (int i = 0; i < f; ++i) {
          sg[i] = sets.Jprime.has(i) ? sp[i] : sth[i];
          tg[i] = sets.Jprime.has(i) ? tp[i] : tth[i];
        }
        Vec g = indicator(f, fam.Mt & sets.Jprime);
        reverse_family("prime->gamma", sets.Jprime, sp, tp, d, sg, tg, g);
        reverse_family("theta->gamma", sets.Jtheta, plus(sth, d), plus(tth, d), Vec(f, 0), sg, tg, g);
      }
  }
  rep.stats["morphisms_checked"] = morphisms;
  rep.stats["families"] = families;
  return rep;
}

AuditReport dims_audit(const Context& ctx, const Vec& k) {
  auto rep = start("dims", ctx, k);
  if (rep.refused) return rep;
  auto fam = make_family(ctx, k);
  const i64 q = ipow(ctx.p, ctx.d);
  for (IndexSet J : all_subsets(ctx.f)) {
    ++rep.units;
    auto sets = forward_sets(ctx, fam, J);
    for (bool eq : {false, true}) {
      auto irr = subspace_dim({J, fam.J0, eq, q});
      auto reg = subspace_dim({sets.Jprime, fam.J0, eq, q});
      auto th = subspace_dim({sets.Jtheta, fam.J0, eq, q});
      bool ok = irr.dim == reg.dim && irr.dim == th.dim && irr.count == ipow(q, irr.dim);
      for (const auto& Jm : sets.Jmu) ok = ok && subspace_dim({Jm, fam.J0, eq, q}).dim == irr.dim;
      if (!ok) rep.fail({{"k", k}, {"J", set_json(J)}, {"equal_characters", eq}});
    }
    // J_max of the irregular type never meets J_0 and has the same size as J minus J_0.
    Vec r;
    for (auto row : fam.b) r.push_back(row.b1 - row.b2);
    IndexSet Jm = jmax(ctx, r, J);
    if (!(Jm & fam.J0).is_empty()) rep.fail({{"k", k}, {"J", set_json(J)}, {"jmax", set_json(Jm)}});
  }
  return rep;
}

}  // namespace swt
