#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "swt/ground.hpp"

namespace swt {

inline constexpr i64 kJsonSafeLimit = i64{1} << 53;

// Integers with |v| >= 2^53 become decimal strings.
nlohmann::json json_int(i64 v);
// Accepts both encodings.
i64 json_to_int(const nlohmann::json& j);

struct VerificationRecord {
  std::string schema = "swt.verification/1";
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::string outcome;  // pass | fail | refused
  nlohmann::json summary = nlohmann::json::object();
  nlohmann::json counterexample;
  std::string reason;
  double wall_time_ms = 0;
  nlohmann::json toolchain = nlohmann::json::object();

  // Equality ignores wall time.
  bool same_result(const VerificationRecord& o) const;
  bool operator==(const VerificationRecord& o) const = default;
};

void to_json(nlohmann::json& j, const VerificationRecord& r);
void from_json(const nlohmann::json& j, VerificationRecord& r);

nlohmann::json toolchain_fingerprint();
// FNV-1a over the suite and canonical parameter dump.
std::string cache_key(const std::string& suite, const nlohmann::json& params);
// Write to PATH.tmp, then rename.
void write_atomic(const std::string& path, const std::string& contents);

// Exit codes: 0 success, 1 verification failure or dichotomy violation, 2 usage or validation error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace swt
