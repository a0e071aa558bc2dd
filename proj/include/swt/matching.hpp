#pragma once
#include <stdexcept>
#include <vector>

#include "swt/fchar.hpp"
#include "swt/kisin.hpp"
#include "swt/report.hpp"
#include "swt/sets.hpp"
#include "swt/weights.hpp"

namespace swt {

struct DichotomyError : std::domain_error {
  using std::domain_error::domain_error;
};

// Every J with char(s(J)) = chi1 and char(t(J)) = chi2.
std::vector<IndexSet> shape_search(const Context& ctx, const InertialChar& chi1, const InertialChar& chi2,
                                   const HTTable& table);
bool semisimple_decide(const Context& ctx, const SemisimpleShape& shape, const Weight& w);

// sum (a_i - b_i) p^{len-1-i} == 0 mod modulus
bool check_congruence(const Context& ctx, const std::vector<i64>& a, const std::vector<i64>& b, i64 modulus);

struct ForwardSets {
  IndexSet Jprime;
  std::vector<IndexSet> Jmu;  // aligned with WeightFamily::mus
  IndexSet Jtheta;
};

ForwardSets forward_sets(const Context& ctx, const WeightFamily& fam, IndexSet J);

struct CongruenceCheck {
  std::string name;
  bool holds;
};
std::vector<CongruenceCheck> forward_congruences(const Context& ctx, const WeightFamily& fam, IndexSet J,
                                                 const ForwardSets& sets);

// DichotomyError if the sets cannot come from a common representation.
IndexSet backward_from_theta(const Context& ctx, const WeightFamily& fam, IndexSet Jprime, IndexSet Jtheta);
IndexSet backward_from_mus(const Context& ctx, const WeightFamily& fam, IndexSet Jprime,
                           const std::vector<IndexSet>& Jmu);

struct SubspaceDescriptor {
  IndexSet J;
  IndexSet J0;
  bool equal_characters = false;
  i64 field_size = 3;
};

struct SubspaceDim {
  int dim = 0;
  i64 count = 1;
};

SubspaceDim subspace_dim(const SubspaceDescriptor& desc);

// Exhaustive audits over one valid weight.
AuditReport congruence_audit(const Context& ctx, const std::vector<i64>& k);
AuditReport alpha_table_audit(const Context& ctx, const std::vector<i64>& k);
AuditReport exceptional_audit(const Context& ctx, const std::vector<i64>& k);
AuditReport semisimple_equivalence_audit(const Context& ctx, const std::vector<i64>& k);
AuditReport subspace_transport_audit(const Context& ctx, const std::vector<i64>& k);
AuditReport dims_audit(const Context& ctx, const std::vector<i64>& k);

}  // namespace swt
