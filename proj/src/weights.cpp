#include "swt/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace swt {

Weight weight_of(std::vector<i64> k) {
  std::vector<i64> l(k.size(), 0);
  return {std::move(k), std::move(l)};
}

bool ValidityReport::only_two_one() const {
  if (violations.empty()) return false;
  for (const auto& v : violations)
    if (v.rule != Rule::TwoOne) return false;
  return true;
}

ValidityReport validate_irregular(const Context& ctx, const std::vector<i64>& k) {
  ValidityReport rep;
  const int f = ctx.f;
  if (static_cast<int>(k.size()) != f) {
    rep.violations.push_back({Rule::Length, "length", "k must have f = " + std::to_string(f) + " entries"});
    return rep;
  }
  bool range_ok = true, all_one = true, some_one = false;
  for (i64 v : k) {
    range_ok = range_ok && v >= 1 && v <= ctx.p;
    all_one = all_one && v == 1;
    some_one = some_one || v == 1;
  }
  if (!range_ok) rep.violations.push_back({Rule::Range, "range", "entries must satisfy 1 <= k_i <= p"});
  if (all_one) rep.violations.push_back({Rule::AllOne, "k_all_one", "k = 1 excluded"});
  if (!some_one) rep.violations.push_back({Rule::Regular, "regular", "k is regular: no entry equals 1"});
  for (int i = 0; i < f; ++i) {
    if (k[i] == 2 && k[(i + 1) % f] == 1) {
      rep.violations.push_back({Rule::TwoOne, "two_one",
                                "(2,1)-condition fails: k_" + std::to_string(i) + " = 2 and k_" +
                                    std::to_string((i + 1) % f) + " = 1"});
      break;
    }
  }
  return rep;
}

void require_valid(const Context& ctx, const std::vector<i64>& k, Strictness s) {
  auto rep = validate_irregular(ctx, k);
  std::string msg;
  for (const auto& v : rep.violations) {
    if (s == Strictness::SkipTwoOne && v.rule == Rule::TwoOne) continue;
    msg += (msg.empty() ? "" : "; ") + v.message;
  }
  if (!msg.empty()) throw std::invalid_argument("invalid weight: " + msg);
}

IndexSet set_J0(const Context& ctx, const std::vector<i64>& k) {
  IndexSet s = IndexSet::empty(ctx.f);
  for (int i = 0; i < ctx.f; ++i)
    if (k[i] == 1) s.set(i);
  return s;
}

IndexSet set_M(const Context& ctx, const std::vector<i64>& k) {
  const int f = ctx.f;
  IndexSet s = IndexSet::empty(f);
  for (int i = 0; i < f; ++i) {
    for (int step = 1; step <= f; ++step) {
      i64 v = k[(i + step) % f];
      if (v == 1) {
        s.set(i);
        break;
      }
      if (v != 2) break;
    }
  }
  return s;
}

IndexSet set_Mtilde(const Context& ctx, const std::vector<i64>& k) {
  const int f = ctx.f;
  IndexSet M = set_M(ctx, k);
  IndexSet s = IndexSet::empty(f);
  for (int i = 0; i < f; ++i) {
    if (k[i] >= 3 && M.has(i)) s.set(i);
    i64 prev = k[(i + f - 1) % f];
    if (k[i] == 2 && k[(i + 1) % f] == 1 && (prev == 1 || (prev == 2 && M.has(i - 1)))) s.set(i);
  }
  return s;
}

IndexSet set_Mtilde2(const Context& ctx, const std::vector<i64>& k) {
  IndexSet Mt = set_Mtilde(ctx, k);
  IndexSet s = Mt;
  for (int i = 0; i < ctx.f; ++i)
    if (Mt.has(i + 1) && k[(i + 1) % ctx.f] == 2) s.set(i);
  return s;
}

std::vector<i64> h_vector(const Context& ctx, int i) {
  std::vector<i64> v(ctx.f, 0);
  v[(i + 1) % ctx.f] += ctx.p;
  v[i % ctx.f] -= 1;
  return v;
}

std::vector<i64> theta_vector(const Context& ctx, int i) {
  std::vector<i64> v(ctx.f, 0);
  v[(i + 1) % ctx.f] += ctx.p;
  v[i % ctx.f] += 1;
  return v;
}

static void add_into(std::vector<i64>& a, const std::vector<i64>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

Weight weight_kprime(const Context& ctx, const std::vector<i64>& k, Strictness s) {
  require_valid(ctx, k, s);
  Weight w = weight_of(k);
  for (int i : set_M(ctx, k).members()) add_into(w.k, h_vector(ctx, i));
  return w;
}

Weight weight_kmu(const Context& ctx, const std::vector<i64>& k, int mu, Strictness s) {
  require_valid(ctx, k, s);
  if (!set_Mtilde(ctx, k).has(mu)) throw std::invalid_argument("mu must lie in M-tilde");
  Weight w = weight_of(k);
  add_into(w.k, theta_vector(ctx, mu));
  for (int i : set_M(ctx, k).members())
    if (i != mu) add_into(w.k, h_vector(ctx, i));
  w.l[mu] = -1;
  return w;
}

static Weight theta_shift(const Context& ctx, const std::vector<i64>& k, IndexSet h_excluded) {
  Weight w = weight_of(k);
  IndexSet Mt = set_Mtilde(ctx, k);
  for (int i : Mt.members()) {
    add_into(w.k, theta_vector(ctx, i));
    w.l[i] -= 1;
  }
  for (int i : (set_M(ctx, k) - h_excluded).members()) add_into(w.k, h_vector(ctx, i));
  return w;
}

Weight weight_ktheta(const Context& ctx, const std::vector<i64>& k, Strictness s) {
  require_valid(ctx, k, s);
  return theta_shift(ctx, k, set_Mtilde(ctx, k));
}

Weight weight_ktheta_alt(const Context& ctx, const std::vector<i64>& k) {
  require_valid(ctx, k, Strictness::SkipTwoOne);
  return theta_shift(ctx, k, set_Mtilde2(ctx, k));
}

HTTable ht_table(const Context& ctx, const Weight& w) {
  if (static_cast<int>(w.k.size()) != ctx.f || static_cast<int>(w.l.size()) != ctx.f)
    throw std::invalid_argument("weight length must equal f");
  HTTable t;
  for (int i = 0; i < ctx.f; ++i) t.push_back({w.k[i] + w.l[i] - 1, w.l[i]});
  return t;
}

std::pair<std::vector<i64>, std::vector<i64>> st_sequences(const HTTable& table, IndexSet J) {
  std::vector<i64> s, t;
  for (std::size_t i = 0; i < table.size(); ++i) {
    bool in = J.has(static_cast<int>(i));
    s.push_back(in ? table[i].b1 : table[i].b2);
    t.push_back(in ? table[i].b2 : table[i].b1);
  }
  return {s, t};
}

BlockDecomposition blocks(const Context& ctx, const std::vector<i64>& k) {
  require_valid(ctx, k);
  const int f = ctx.f;
  IndexSet J0 = set_J0(ctx, k), Mt = set_Mtilde(ctx, k);
  BlockDecomposition dec;
  dec.block_of.assign(f, -1);
  for (int start = 0; start < f; ++start) {
    if (!(J0.has(start - 1) && !J0.has(start))) continue;
    Block b;
    int i = start;
    while (true) {
      b.members.push_back(i % f);
      if (J0.has(i) && !J0.has(i + 1)) break;
      ++i;
    }
    for (int m : b.members) {
      if (Mt.has(m)) {
        if (b.nu >= 0) throw std::logic_error("block with two M-tilde elements");
        b.nu = m;
      } else if (b.nu >= 0 && J0.has(m)) {
        b.tail.push_back(m);
      }
      dec.block_of[m] = static_cast<int>(dec.blocks.size());
    }
    if (b.nu < 0) throw std::logic_error("block without an M-tilde element");
    dec.blocks.push_back(b);
  }
  return dec;
}

HTTable closed_form_bprime(const Context& ctx, const std::vector<i64>& k) {
  require_valid(ctx, k);
  IndexSet J0 = set_J0(ctx, k), M = set_M(ctx, k), Mt = set_Mtilde(ctx, k);
  HTTable t(ctx.f);
  for (int i = 0; i < ctx.f; ++i) {
    if (J0.has(i)) t[i].b1 = M.has(i) ? ctx.p - 1 : ctx.p;
    else if (Mt.has(i)) t[i].b1 = k[i] - 2;
    else if (!M.has(i)) t[i].b1 = k[i] - 1;
    else throw std::logic_error("index in M outside M-tilde and J_0");
  }
  return t;
}

HTTable closed_form_bmu(const Context& ctx, const std::vector<i64>& k, int mu) {
  HTTable t = closed_form_bprime(ctx, k);
  if (!set_Mtilde(ctx, k).has(mu)) throw std::invalid_argument("mu must lie in M-tilde");
  t[mu] = {k[mu] - 1, -1};
  return t;
}

HTTable closed_form_btheta(const Context& ctx, const std::vector<i64>& k) {
  require_valid(ctx, k);
  IndexSet J0 = set_J0(ctx, k), M = set_M(ctx, k), Mt = set_Mtilde(ctx, k);
  HTTable t(ctx.f);
  for (int i = 0; i < ctx.f; ++i) {
    if (!J0.has(i)) t[i].b1 = k[i] - 1;
    else t[i].b1 = M.has(i) ? ctx.p - 1 : ctx.p;
    t[i].b2 = Mt.has(i) ? -1 : 0;
  }
  return t;
}

NormalizedWeight normalize_twist(const Weight& w) { return {weight_of(w.k), w.l}; }

std::vector<std::vector<i64>> valid_weights(const Context& ctx) {
  std::vector<std::vector<i64>> out;
  std::vector<i64> k(ctx.f, 1);
  while (true) {
    if (validate_irregular(ctx, k).valid()) out.push_back(k);
    int i = 0;
    while (i < ctx.f && k[i] == ctx.p) k[i++] = 1;
    if (i == ctx.f) break;
    ++k[i];
  }
  return out;
}

int WeightFamily::mu_slot(int mu) const {
  auto it = std::find(mus.begin(), mus.end(), mu);
  if (it == mus.end()) throw std::invalid_argument("mu must lie in M-tilde");
  return static_cast<int>(it - mus.begin());
}

WeightFamily make_family(const Context& ctx, const std::vector<i64>& k) {
  require_valid(ctx, k);
  WeightFamily fam;
  fam.k = k;
  fam.J0 = set_J0(ctx, k);
  fam.M = set_M(ctx, k);
  fam.Mt = set_Mtilde(ctx, k);
  fam.Mt2 = set_Mtilde2(ctx, k);
  fam.blocks = blocks(ctx, k);
  fam.mus = fam.Mt.members();
  fam.irregular = weight_of(k);
  fam.prime = weight_kprime(ctx, k);
  fam.theta = weight_ktheta(ctx, k);
  fam.b = ht_table(ctx, fam.irregular);
  fam.bprime = ht_table(ctx, fam.prime);
  fam.btheta = ht_table(ctx, fam.theta);
  for (int mu : fam.mus) {
    fam.mu_weights.push_back(weight_kmu(ctx, k, mu));
    fam.bmu.push_back(ht_table(ctx, fam.mu_weights.back()));
  }
  return fam;
}

}  // namespace swt
