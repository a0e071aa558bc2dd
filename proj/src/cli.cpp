#include "swt/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "swt/audits.hpp"
#include "swt/irreducible.hpp"
#include "swt/matching.hpp"
#include "swt/weights.hpp"

namespace swt {

using nlohmann::json;
using Vec = std::vector<i64>;

json json_int(i64 v) {
  if (v >= kJsonSafeLimit || v <= -kJsonSafeLimit) return std::to_string(v);
  return v;
}

i64 json_to_int(const json& j) {
  if (j.is_string()) return std::stoll(j.get<std::string>());
  return j.get<i64>();
}

bool VerificationRecord::same_result(const VerificationRecord& o) const {
  VerificationRecord a = *this, b = o;
  a.wall_time_ms = b.wall_time_ms = 0;
  return a == b;
}

void to_json(json& j, const VerificationRecord& r) {
  j = json{{"schema", r.schema},   {"suite", r.suite},
           {"params", r.params},   {"outcome", r.outcome},
           {"summary", r.summary}, {"counterexample", r.counterexample},
           {"reason", r.reason},   {"wall_time_ms", r.wall_time_ms},
           {"toolchain", r.toolchain}};
}

void from_json(const json& j, VerificationRecord& r) {
  j.at("schema").get_to(r.schema);
  j.at("suite").get_to(r.suite);
  r.params = j.at("params");
  j.at("outcome").get_to(r.outcome);
  r.summary = j.at("summary");
  r.counterexample = j.at("counterexample");
  j.at("reason").get_to(r.reason);
  j.at("wall_time_ms").get_to(r.wall_time_ms);
  r.toolchain = j.at("toolchain");
}

json toolchain_fingerprint() {
#if defined(__clang__)
  std::string compiler = "clang " __clang_version__;
#elif defined(__GNUC__)
  std::string compiler = "gcc " __VERSION__;
#else
  std::string compiler = "unknown";
#endif
  return {{"compiler", compiler}, {"cplusplus", static_cast<i64>(__cplusplus)}, {"swt", "1.0.0"}};
}

std::string cache_key(const std::string& suite, const json& params) {
  std::string text = suite + "|" + params.dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

void write_atomic(const std::string& path, const std::string& contents) {
  std::filesystem::path target(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << contents;
    if (!f) throw std::runtime_error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, target);
}

namespace {

// Exit-code carrying failure for the dispatcher.
struct CliExit {
  int code;
  std::string message;
  json document;
};

struct RunConfig {
  i64 p = 0;
  int f = 0;
  int d = 1;
  std::string k_text, l_text, j_text, jprime_text, jtheta_text;
  std::vector<std::string> jmu_text;
  std::string suite, shard = "0/1", out_path, cache_dir;
  bool force = false, as_json = false, allow_alt = false;
  bool has_j = false, has_jprime = false, has_jtheta = false;
};

Vec parse_vector(const std::string& text, const std::string& flag) {
  Vec out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(tok, &used));
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != tok.size()) throw std::invalid_argument("bad integer list for " + flag + ": '" + text + "'");
  }
  if (out.empty()) throw std::invalid_argument(flag + " needs at least one entry");
  return out;
}

IndexSet parse_set(int n, std::string text) {
  text.erase(std::remove(text.begin(), text.end(), '{'), text.end());
  text.erase(std::remove(text.begin(), text.end(), '}'), text.end());
  text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
  return parse_index_set(n, text);
}

std::pair<i64, i64> parse_shard(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("shard must look like i/n");
  i64 i = 0, n = 0;
  try {
    std::size_t u1 = 0, u2 = 0;
    i = std::stoll(text.substr(0, slash), &u1);
    n = std::stoll(text.substr(slash + 1), &u2);
    if (u1 != slash || u2 != text.size() - slash - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("shard must look like i/n");
  }
  if (n < 1 || i < 0 || i >= n) throw std::invalid_argument("shard index must satisfy 0 <= i < n");
  return {i, n};
}

Context context_of(const RunConfig& c) {
  if (c.p <= 0 || c.f <= 0) throw std::invalid_argument("--p and --f are required");
  return make_context(c.p, c.f, c.d);
}

json params_of(const Context& ctx) {
  return {{"p", ctx.p}, {"f", ctx.f}, {"d", ctx.d}, {"m1", json_int(ctx.m1)}, {"m2", json_int(ctx.m2)}};
}

Vec require_k(const RunConfig& c, const Context& ctx) {
  if (c.k_text.empty()) throw std::invalid_argument("--k is required");
  Vec k = parse_vector(c.k_text, "--k");
  if (static_cast<int>(k.size()) != ctx.f) throw std::invalid_argument("--k must have f entries");
  return k;
}

json set_json(IndexSet s) { return s.members(); }

json weight_json(const Weight& w, const Vec& l) {
  Vec lw = w.l;
  for (std::size_t i = 0; i < lw.size(); ++i) lw[i] += l[i];
  return {{"k", w.k}, {"l", lw}};
}

json table_json(const HTTable& t, const Vec& l) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) rows.push_back({t[i].b1 + l[i], t[i].b2 + l[i]});
  return rows;
}

json violations_json(const ValidityReport& rep) {
  json v = json::array();
  for (const auto& x : rep.violations) v.push_back({{"code", x.code}, {"message", x.message}});
  return v;
}

std::string reason_of(const ValidityReport& rep) {
  std::string r;
  for (const auto& v : rep.violations) r += (r.empty() ? "" : "; ") + v.message;
  return r;
}

json cmd_shift(const RunConfig& c) {
  auto ctx = context_of(c);
  Vec k = require_k(c, ctx);
  Vec l = c.l_text.empty() ? Vec(ctx.f, 0) : parse_vector(c.l_text, "--l");
  if (static_cast<int>(l.size()) != ctx.f) throw std::invalid_argument("--l must have f entries");
  auto rep = validate_irregular(ctx, k);
  json doc{{"schema", "swt.shift/1"}, {"params", params_of(ctx)}, {"k", k}, {"l", l}};
  doc["params"]["k"] = k;
  doc["params"]["l"] = l;
  doc["valid"] = rep.valid();
  doc["violations"] = violations_json(rep);
  if (!rep.valid()) {
    if (!(rep.only_two_one() && c.allow_alt)) throw CliExit{2, "invalid weight: " + reason_of(rep), doc};
    doc["ktheta_alt"] = weight_json(weight_ktheta_alt(ctx, k), l);
    doc["tables"] = {{"theta_alt", table_json(ht_table(ctx, weight_ktheta_alt(ctx, k)), l)}};
    doc["sets"] = {{"J0", set_json(set_J0(ctx, k))}, {"Mtilde2", set_json(set_Mtilde2(ctx, k))}};
    return doc;
  }
  auto fam = make_family(ctx, k);
  doc["sets"] = {{"J0", set_json(fam.J0)}, {"M", set_json(fam.M)}, {"Mtilde", set_json(fam.Mt)}, {"Mtilde2", set_json(fam.Mt2)}};
  json blocks = json::array();
  for (const auto& b : fam.blocks.blocks) blocks.push_back({{"members", b.members}, {"nu", b.nu}, {"tail", b.tail}});
  doc["blocks"] = blocks;
  doc["kprime"] = weight_json(fam.prime, l);
  json kmu = json::array(), tmu = json::array();
  for (std::size_t j = 0; j < fam.mus.size(); ++j) {
    json w = weight_json(fam.mu_weights[j], l);
    w["mu"] = fam.mus[j];
    kmu.push_back(w);
    tmu.push_back({{"mu", fam.mus[j]}, {"table", table_json(fam.bmu[j], l)}});
  }
  doc["kmu"] = kmu;
  doc["ktheta"] = weight_json(fam.theta, l);
  doc["ktheta_alt"] = weight_json(weight_ktheta_alt(ctx, k), l);
  doc["tables"] = {{"irregular", table_json(fam.b, l)},
                   {"prime", table_json(fam.bprime, l)},
                   {"mu", tmu},
                   {"theta", table_json(fam.btheta, l)},
                   {"theta_alt", table_json(ht_table(ctx, weight_ktheta_alt(ctx, k)), l)}};
  return doc;
}

json cmd_match(const RunConfig& c) {
  auto ctx = context_of(c);
  Vec k = require_k(c, ctx);
  auto rep = validate_irregular(ctx, k);
  json doc{{"schema", "swt.match/1"}, {"params", params_of(ctx)}};
  doc["params"]["k"] = k;
  if (!rep.valid()) throw CliExit{2, "invalid weight: " + reason_of(rep), doc};
  auto fam = make_family(ctx, k);
  bool backward = c.has_jprime;
  if (backward == c.has_j) throw std::invalid_argument("give either --j or --jprime");

  if (!backward) {
    IndexSet J = parse_set(ctx.f, c.j_text);
    auto sets = forward_sets(ctx, fam, J);
    doc["direction"] = "forward";
    doc["J"] = set_json(J);
    doc["Jprime"] = set_json(sets.Jprime);
    doc["Jtheta"] = set_json(sets.Jtheta);
    json jmu = json::array();
    for (std::size_t j = 0; j < fam.mus.size(); ++j) jmu.push_back({{"mu", fam.mus[j]}, {"J", set_json(sets.Jmu[j])}});
    doc["Jmu"] = jmu;
    json checks = json::array();
    bool all = true;
    for (const auto& chk : forward_congruences(ctx, fam, J, sets)) {
      checks.push_back({{"name", chk.name}, {"holds", chk.holds}});
      all = all && chk.holds;
    }
    doc["congruences"] = checks;
    doc["all_hold"] = all;
    if (!all) throw CliExit{1, "a congruence fails", doc};
    return doc;
  }

  IndexSet Jp = parse_set(ctx.f, c.jprime_text);
  doc["direction"] = "backward";
  doc["Jprime"] = set_json(Jp);
  if (!c.has_jtheta && c.jmu_text.empty()) throw std::invalid_argument("backward matching needs --jtheta or --jmu");
  try {
    if (c.has_jtheta) {
      IndexSet Jt = parse_set(ctx.f, c.jtheta_text);
      doc["Jtheta"] = set_json(Jt);
      doc["J_from_theta"] = set_json(backward_from_theta(ctx, fam, Jp, Jt));
    }
    if (!c.jmu_text.empty()) {
      std::vector<std::optional<IndexSet>> slots(fam.mus.size());
      for (const auto& text : c.jmu_text) {
        auto colon = text.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("--jmu must look like MU:LIST");
        int mu = static_cast<int>(parse_vector(text.substr(0, colon), "--jmu")[0]);
        if (!fam.Mt.has(mu)) throw std::invalid_argument("--jmu index " + std::to_string(mu) + " is not in M-tilde");
        int slot = fam.mu_slot(mu);
        slots[slot] = parse_set(ctx.f, text.substr(colon + 1));
      }
      std::vector<IndexSet> Jmu;
      json jmu = json::array();
      for (std::size_t j = 0; j < slots.size(); ++j) {
        if (!slots[j]) throw std::invalid_argument("--jmu missing for mu = " + std::to_string(fam.mus[j]));
        Jmu.push_back(*slots[j]);
        jmu.push_back({{"mu", fam.mus[j]}, {"J", set_json(*slots[j])}});
      }
      doc["Jmu"] = jmu;
      doc["J_from_mu"] = set_json(backward_from_mus(ctx, fam, Jp, Jmu));
    }
  } catch (const DichotomyError& e) {
    doc["error"] = e.what();
    throw CliExit{1, e.what(), doc};
  }
  return doc;
}

VerificationRecord compute_record(const Context& ctx, const std::string& suite, const std::optional<Vec>& k,
                                  const json& params) {
  auto t0 = std::chrono::steady_clock::now();
  AuditReport rep = run_suite(ctx, suite, k);
  auto t1 = std::chrono::steady_clock::now();
  VerificationRecord r;
  r.suite = suite;
  r.params = params;
  r.outcome = rep.refused ? "refused" : rep.failures == 0 ? "pass" : "fail";
  r.summary = {{"units", json_int(rep.units)}, {"failures", json_int(rep.failures)}, {"stats", rep.stats}};
  r.counterexample = rep.counterexample;
  r.reason = rep.reason;
  r.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  r.toolchain = toolchain_fingerprint();
  return r;
}

int outcome_code(const VerificationRecord& r) { return r.outcome == "pass" ? 0 : r.outcome == "fail" ? 1 : 2; }

json cmd_verify(const RunConfig& c, std::ostream& err, int& code) {
  if (c.suite.empty()) throw std::invalid_argument("verify needs a suite");
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), c.suite) == names.end())
    throw std::invalid_argument("unknown suite: " + c.suite);
  auto ctx = context_of(c);
  std::optional<Vec> k;
  json params = params_of(ctx);
  if (!c.k_text.empty()) {
    if (!suite_uses_weight(c.suite)) throw std::invalid_argument("suite " + c.suite + " takes no --k");
    k = require_k(c, ctx);
    params["k"] = *k;
  }

  std::string cache_path;
  std::optional<VerificationRecord> cached;
  if (!c.cache_dir.empty()) {
    cache_path = (std::filesystem::path(c.cache_dir) / (cache_key(c.suite, params) + ".json")).string();
    std::ifstream in(cache_path);
    if (in) {
      try {
        cached = json::parse(in).get<VerificationRecord>();
      } catch (const std::exception&) {
        err << "ignoring unreadable cache entry " << cache_path << "\n";
      }
    }
  }
  if (cached && !c.force) {
    err << "cache hit " << cache_path << "\n";
    code = outcome_code(*cached);
    return *cached;
  }
  VerificationRecord rec = compute_record(ctx, c.suite, k, params);
  code = outcome_code(rec);
  if (cached && !cached->same_result(rec)) {
    err << "cached record differs from recomputed record: " << cache_path << "\n";
    code = 1;
  }
  if (!cache_path.empty()) write_atomic(cache_path, json(rec).dump(2) + "\n");
  return rec;
}

void cmd_enumerate(const RunConfig& c, std::ostream& out) {
  auto ctx = context_of(c);
  auto [shard, shards] = parse_shard(c.shard);
  std::vector<Vec> weights;
  if (!c.k_text.empty()) {
    Vec k = require_k(c, ctx);
    auto rep = validate_irregular(ctx, k);
    if (!rep.valid()) throw CliExit{2, "invalid weight: " + reason_of(rep), json()};
    weights.push_back(k);
  } else {
    weights = valid_weights(ctx);
  }
  i64 index = 0;
  for (const auto& k : weights) {
    auto fam = make_family(ctx, k);
    for (std::uint32_t m = 0; m < (1u << ctx.f); ++m, ++index) {
      if (index % shards != shard) continue;
      IndexSet J(ctx.f, m);
      auto sets = forward_sets(ctx, fam, J);
      bool all = true;
      for (const auto& chk : forward_congruences(ctx, fam, J, sets)) all = all && chk.holds;
      IndexSet back = backward_from_theta(ctx, fam, sets.Jprime, sets.Jtheta);
      json jmu = json::array();
      for (std::size_t j = 0; j < fam.mus.size(); ++j) jmu.push_back({{"mu", fam.mus[j]}, {"J", set_json(sets.Jmu[j])}});
      json rec{{"unit", index}, {"p", ctx.p}, {"f", ctx.f}, {"k", k}, {"J", set_json(J)},
               {"Jprime", set_json(sets.Jprime)}, {"Jtheta", set_json(sets.Jtheta)}, {"Jmu", jmu},
               {"congruences_hold", all}, {"backward", set_json(back)}};
      out << rec.dump() << "\n";
    }
  }
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--p", c.p, "prime")->required();
  sub->add_option("--f", c.f, "residue degree")->required();
  sub->add_option("--d", c.d, "coefficient field degree over F_p");
  sub->add_option("--out", c.out_path, "also write the output to PATH");
  sub->add_flag("--json", c.as_json, "print JSON instead of a summary");
}

std::string list_str(const json& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].dump();
  return s + ")";
}

std::string set_str(const json& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].dump();
  return s + "}";
}

std::string summary_text(const std::string& cmd, const json& doc) {
  std::ostringstream os;
  if (cmd == "shift") {
    if (doc.contains("kprime")) {
      os << "k' = " << list_str(doc["kprime"]["k"]) << "\n";
      for (const auto& w : doc["kmu"]) os << "k^mu[" << w["mu"] << "] = " << list_str(w["k"]) << " l = " << list_str(w["l"]) << "\n";
      os << "k^theta = " << list_str(doc["ktheta"]["k"]) << " l = " << list_str(doc["ktheta"]["l"]) << "\n";
    }
    if (doc.contains("ktheta_alt"))
      os << "k^theta,alt = " << list_str(doc["ktheta_alt"]["k"]) << " l = " << list_str(doc["ktheta_alt"]["l"]) << "\n";
  } else if (cmd == "match") {
    for (const char* key : {"J", "Jprime", "Jtheta", "J_from_theta", "J_from_mu"})
      if (doc.contains(key)) os << key << " = " << set_str(doc[key]) << "\n";
    if (doc.contains("Jmu"))
      for (const auto& m : doc["Jmu"]) os << "Jmu[" << m["mu"] << "] = " << set_str(m["J"]) << "\n";
    if (doc.contains("congruences"))
      for (const auto& chk : doc["congruences"]) os << chk["name"].get<std::string>() << ": " << (chk["holds"].get<bool>() ? "holds" : "FAILS") << "\n";
  } else if (cmd == "verify") {
    os << doc["suite"].get<std::string>() << ": " << doc["outcome"].get<std::string>() << " (" << doc["summary"]["units"].dump()
       << " units, " << doc["summary"]["failures"].dump() << " failures)";
    if (!doc["reason"].get<std::string>().empty()) os << " " << doc["reason"].get<std::string>();
    os << "\n";
    if (!doc["counterexample"].is_null()) os << "counterexample: " << doc["counterexample"].dump() << "\n";
  }
  return os.str();
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Serre weight shift toolkit", "swt"};
  app.require_subcommand(1);
  RunConfig c;

  auto* shift = app.add_subcommand("shift", "weight shifts, HT tables and index sets");
  add_common(shift, c);
  shift->add_option("--k", c.k_text, "weight, comma separated");
  shift->add_option("--l", c.l_text, "twist, comma separated");
  shift->add_flag("--allow-alt", c.allow_alt, "emit the alternative theta shift when only the (2,1) rule fails");

  auto* match = app.add_subcommand("match", "forward or backward subset matching");
  add_common(match, c);
  match->add_option("--k", c.k_text, "weight, comma separated");
  match->add_option("--j", c.j_text, "J for forward matching");
  match->add_option("--jprime", c.jprime_text, "J' for backward matching");
  match->add_option("--jtheta", c.jtheta_text, "J^theta for backward matching");
  match->add_option("--jmu", c.jmu_text, "MU:LIST, repeatable");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, c);
  verify->add_option("suite,--suite", c.suite, "suite name");
  verify->add_option("--k", c.k_text, "restrict weight suites to one weight");
  verify->add_option("--cache", c.cache_dir, "cache directory");
  verify->add_flag("--force", c.force, "recompute and compare with the cache");

  auto* enumerate = app.add_subcommand("enumerate", "stream matching units as JSON lines");
  add_common(enumerate, c);
  enumerate->add_option("--k", c.k_text, "restrict to one weight");
  enumerate->add_option("--shard", c.shard, "i/n");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  c.has_j = match->count("--j") > 0;
  c.has_jprime = match->count("--jprime") > 0;
  c.has_jtheta = match->count("--jtheta") > 0;

  std::string cmd = app.get_subcommands().front()->get_name();
  auto emit = [&](const json& doc) {
    std::string body = doc.dump(2) + "\n";
    if (!c.out_path.empty()) write_atomic(c.out_path, body);
    out << (c.as_json ? body : summary_text(cmd, doc));
  };

  try {
    if (cmd == "enumerate") {
      if (c.out_path.empty()) {
        cmd_enumerate(c, out);
      } else {
        std::ostringstream buf;
        cmd_enumerate(c, buf);
        write_atomic(c.out_path, buf.str());
      }
      return 0;
    }
    if (cmd == "verify") {
      int code = 0;
      json doc = cmd_verify(c, err, code);
      emit(doc);
      return code;
    }
    emit(cmd == "shift" ? cmd_shift(c) : cmd_match(c));
    return 0;
  } catch (const CliExit& e) {
    err << e.message << "\n";
    if (!e.document.is_null()) {
      json doc = e.document;
      doc["reason"] = e.message;
      if (c.as_json) out << doc.dump(2) << "\n";
    }
    return e.code;
  } catch (const DichotomyError& e) {
    err << "dichotomy violated: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace swt
