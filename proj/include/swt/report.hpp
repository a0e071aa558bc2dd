#pragma once
#include <string>

#include <json.hpp>

#include "swt/ground.hpp"

namespace swt {

// Outcome of an exhaustive audit.
struct AuditReport {
  std::string suite;
  i64 units = 0;
  i64 failures = 0;
  bool refused = false;
  std::string reason;
  nlohmann::json counterexample;  // first failure, null if none
  nlohmann::json stats = nlohmann::json::object();

  bool passed() const { return !refused && failures == 0; }
  void fail(nlohmann::json witness) {
    if (failures++ == 0) counterexample = std::move(witness);
  }
  void absorb(const AuditReport& other);
};

AuditReport refused_report(const std::string& suite, const std::string& reason);

}  // namespace swt
