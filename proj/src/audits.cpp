#include "swt/audits.hpp"

#include <algorithm>
#include <stdexcept>

#include "swt/irreducible.hpp"
#include "swt/kisin.hpp"
#include "swt/matching.hpp"
#include "swt/weights.hpp"

namespace swt {

using nlohmann::json;
using Vec = std::vector<i64>;

namespace {

// Odometer over [lo, hi]^f, index 0 fastest.
template <class Fn>
void for_each_tuple(int f, i64 lo, i64 hi, Fn&& fn) {
  Vec r(f, lo);
  while (true) {
    fn(r);
    int i = 0;
    while (i < f && r[i] == hi) r[i++] = lo;
    if (i == f) return;
    ++r[i];
  }
}

void add_stat(AuditReport& rep, const std::string& key, i64 v) {
  rep.stats[key] = rep.stats.value(key, i64{0}) + v;
}

void merge_stats(AuditReport& into, const AuditReport& from) {
  for (const auto& [key, v] : from.stats.items())
    if (v.is_number_integer()) add_stat(into, key, v.get<i64>());
}

bool is_congruent_zero(const Context& ctx, const Vec& r) {
  i64 acc = 0;
  for (int i = 0; i < ctx.f; ++i) acc = mod(acc + mulmod(mod(r[i], ctx.m1), ipow(ctx.p, ctx.f - 1 - i) % ctx.m1, ctx.m1), ctx.m1);
  return acc == 0;
}

}  // namespace

AuditReport cyclic_decomposition_audit(const Context& ctx) {
  AuditReport rep;
  rep.suite = "lemma71";
  i64 congruent = 0, flags = 0;
  for_each_tuple(ctx.f, -ctx.p, ctx.p, [&](const Vec& r) {
    ++rep.units;
    bool cong = is_congruent_zero(ctx, r);
    auto dec = try_decompose_cyclic(ctx, r);
    if (dec.has_value() != cong) {
      rep.fail({{"r", r}, {"congruent", cong}, {"decomposed", dec.has_value()}});
      return;
    }
    if (!dec) return;
    ++congruent;
    flags += dec->flag != 0;
    Vec back = recompose(ctx, *dec);
    if (back != r || !is_congruent_zero(ctx, back)) rep.fail({{"r", r}, {"recomposed", back}});
    if (dec->flag == 0) {
      std::vector<int> cover(ctx.f, 0);
      for (const auto& s : dec->strings)
        for (int k = 0; k < s.length; ++k) ++cover[(s.begin + k) % ctx.f];
      if (std::any_of(cover.begin(), cover.end(), [](int c) { return c != 1; }))
        rep.fail({{"r", r}, {"error", "strings do not partition the indices"}});
    }
  });
  rep.stats["tuples"] = rep.units;
  rep.stats["congruent"] = congruent;
  rep.stats["flags"] = flags;
  return rep;
}

AuditReport pprime_audit(const Context& ctx) {
  AuditReport rep;
  rep.suite = "pprime";
  auto F = make_field(ctx.p, ctx.d);
  auto a = FieldElem::one(F);
  i64 homs = 0;
  for_each_tuple(ctx.f, 0, ctx.p, [&](const Vec& r) {
    for (std::uint32_t m = 0; m < (1u << ctx.f); ++m) {
      IndexSet J(ctx.f, m);
      ++rep.units;
      Vec h = h_of(r, J), rest(ctx.f);
      for (int i = 0; i < ctx.f; ++i) rest[i] = r[i] - h[i];
      if (hom_exists(ctx, rank_one(h, a), rank_one(rest, a))) {
        ++homs;
        if (!necessary_map_conditions(ctx, r, J)) rep.fail({{"r", r}, {"J", J.members()}});
      }
      IndexSet Jm = jmax(ctx, r, J);
      if (!(jmax(ctx, r, Jm) == Jm) || mod(h_value(ctx, r, Jm) - h_value(ctx, r, J), ctx.m1) != 0)
        rep.fail({{"r", r}, {"J", J.members()}, {"jmax", Jm.members()}});
    }
  });
  rep.stats["maps"] = homs;
  return rep;
}

AuditReport alpha_identity_audit(const Context& ctx) {
  AuditReport rep;
  rep.suite = "alpha-id";
  auto F = make_field(ctx.p, ctx.d);
  auto a = FieldElem::one(F);
  for_each_tuple(ctx.f, 0, ctx.p, [&](const Vec& r) {
    auto N = rank_one(r, a);
    for (int i = 0; i < ctx.f; ++i) {
      ++rep.units;
      if (alpha(ctx, N, i) + Rational(r[i]) != Rational(ctx.p) * alpha(ctx, N, static_cast<int>(mod(i - 1, ctx.f))))
        rep.fail({{"r", r}, {"i", i}});
    }
  });
  if (ctx.f <= 2 && ctx.p == 3) {
    for_each_tuple(ctx.f, 0, ctx.p, [&](const Vec& r1) {
      for_each_tuple(ctx.f, 0, ctx.p, [&](const Vec& r2) {
        ++rep.units;
        auto N1 = rank_one(r1, a), N2 = rank_one(r2, a);
        if (hom_exists(ctx, N1, N2) && !char_eq(inertial_char(ctx, N1), inertial_char(ctx, N2)))
          rep.fail({{"r1", r1}, {"r2", r2}, {"error", "map without equal characters"}});
      });
    });
  }
  return rep;
}

AuditReport closed_form_audit(const Context& ctx) {
  AuditReport rep;
  rep.suite = "closed-forms";
  auto gaps_ok = [&](const HTTable& t) {
    return std::all_of(t.begin(), t.end(), [&](const HTRow& row) { return row.b1 - row.b2 >= 0 && row.b1 - row.b2 <= ctx.p; });
  };
  i64 relaxed = 0, relaxed_gap_violations = 0;
  for_each_tuple(ctx.f, 1, ctx.p, [&](const Vec& k) {
    auto report = validate_irregular(ctx, k);
    if (report.valid()) {
      ++rep.units;
      auto fam = make_family(ctx, k);
      if (fam.bprime != closed_form_bprime(ctx, k)) rep.fail({{"k", k}, {"table", "prime"}});
      if (fam.btheta != closed_form_btheta(ctx, k)) rep.fail({{"k", k}, {"table", "theta"}});
      for (std::size_t j = 0; j < fam.mus.size(); ++j)
        if (fam.bmu[j] != closed_form_bmu(ctx, k, fam.mus[j])) rep.fail({{"k", k}, {"table", "mu"}, {"mu", fam.mus[j]}});
      std::vector<const HTTable*> all{&fam.bprime, &fam.btheta};
      for (const auto& t : fam.bmu) all.push_back(&t);
      for (const HTTable* t : all)
        if (!gaps_ok(*t)) rep.fail({{"k", k}, {"error", "gap bound fails"}});
    } else if (report.only_two_one()) {
      ++relaxed;
      std::vector<Weight> ws{weight_kprime(ctx, k, Strictness::SkipTwoOne), weight_ktheta(ctx, k, Strictness::SkipTwoOne)};
      for (int mu : set_Mtilde(ctx, k).members()) ws.push_back(weight_kmu(ctx, k, mu, Strictness::SkipTwoOne));
      bool bad = false;
      for (const auto& w : ws) bad = bad || !gaps_ok(ht_table(ctx, w));
      relaxed_gap_violations += bad;
    }
  });
  rep.stats["relaxed_weights"] = relaxed;
  rep.stats["relaxed_gap_violations"] = relaxed_gap_violations;
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma71",   "pprime",           "alpha-id",
                                              "alpha-tables", "exceptional",   "semisimple-equiv",
                                              "transport", "irr-equiv",        "dims"};
  return names;
}

bool suite_uses_weight(const std::string& suite) {
  return suite != "lemma71" && suite != "pprime" && suite != "alpha-id";
}

static AuditReport run_weight_suite(const Context& ctx, const std::string& suite, const Vec& k) {
  if (suite == "alpha-tables") return alpha_table_audit(ctx, k);
  if (suite == "exceptional") return exceptional_audit(ctx, k);
  if (suite == "semisimple-equiv") return semisimple_equivalence_audit(ctx, k);
  if (suite == "transport") return subspace_transport_audit(ctx, k);
  if (suite == "dims") return dims_audit(ctx, k);
  auto rep = irr_equivalence_audit(ctx, k);
  if (rep.refused) return rep;
  auto reb = rebalance_audit(ctx, k);
  rep.absorb(reb);
  merge_stats(rep, reb);
  return rep;
}

AuditReport run_suite(const Context& ctx, const std::string& suite, const std::optional<Vec>& k) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite: " + suite);
  if (suite == "lemma71") return cyclic_decomposition_audit(ctx);
  if (suite == "pprime") return pprime_audit(ctx);
  if (suite == "alpha-id") return alpha_identity_audit(ctx);
  if (k) {
    auto rep = run_weight_suite(ctx, suite, *k);
    rep.suite = suite;
    return rep;
  }
  auto weights = valid_weights(ctx);
  if (weights.empty()) return refused_report(suite, "no valid irregular weight for these parameters");
  AuditReport rep;
  rep.suite = suite;
  for (const auto& w : weights) {
    auto one = run_weight_suite(ctx, suite, w);
    if (one.failures > 0 && rep.failures == 0) one.counterexample["k"] = w;
    rep.absorb(one);
    merge_stats(rep, one);
  }
  rep.stats["weights"] = static_cast<i64>(weights.size());
  return rep;
}

}  // namespace swt
