#pragma once
#include <optional>
#include <string>
#include <vector>

#include "swt/report.hpp"

namespace swt {

// Exhaustive over the weight-free ranges of ctx.
AuditReport cyclic_decomposition_audit(const Context& ctx);
AuditReport pprime_audit(const Context& ctx);
AuditReport alpha_identity_audit(const Context& ctx);
// Closed-form HT tables and the gap bound for every valid weight.
AuditReport closed_form_audit(const Context& ctx);

const std::vector<std::string>& suite_names();
bool suite_uses_weight(const std::string& suite);

// Weight suites run on k, or on every valid weight when k is empty.
// std::invalid_argument for an unknown suite.
AuditReport run_suite(const Context& ctx, const std::string& suite, const std::optional<std::vector<i64>>& k);

}  // namespace swt
