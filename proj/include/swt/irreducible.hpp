#pragma once
#include <string>
#include <vector>

#include "swt/matching.hpp"
#include "swt/report.hpp"
#include "swt/weights.hpp"

namespace swt {

// Indices 0..2f-1 of the quadratic frame; projection is i mod f, Frobenius is +1.
inline int project(const Context& ctx, int sigma) { return sigma % ctx.f; }

bool is_balanced(const Context& ctx, IndexSet J);

// s_sigma = b1 at pi(sigma) on J, b2 off J (length 2f).
std::vector<i64> quadratic_s(const Context& ctx, const HTTable& table, IndexSet J);
std::vector<i64> quadratic_t(const Context& ctx, const HTTable& table, IndexSet J);
i64 char2(const Context& ctx, const std::vector<i64>& e);

// char2(s(J)) == p^f char2(t(J))
bool induced_pair_condition(const Context& ctx, const HTTable& table, IndexSet J);

// Balanced J'' with char2(s(J'')) == char2(s(J)).
// std::invalid_argument when the induced-pair condition fails or the character is Frobenius-stable.
IndexSet rebalance(const Context& ctx, const HTTable& table, IndexSet J);

struct IrrWitness {
  std::string label;
  Weight weight;
  HTTable table;
  std::vector<i64> exponents;
  IndexSet J;
};

std::vector<IrrWitness> irr_forward(const Context& ctx, const WeightFamily& fam, IndexSet J);
// Regular k gives the identity rewriting.
std::vector<IrrWitness> irr_forward(const Context& ctx, const std::vector<i64>& k, IndexSet J);

// DichotomyError when the tail lifts of some M-tilde lift split across J'.
IndexSet irr_backward_theta(const Context& ctx, const WeightFamily& fam, IndexSet Jprime, IndexSet Jtheta);
IndexSet irr_backward_mus(const Context& ctx, const WeightFamily& fam, IndexSet Jprime,
                          const std::vector<IndexSet>& Jmu);

AuditReport irr_equivalence_audit(const Context& ctx, const std::vector<i64>& k);
// Exhaustive rebalance check over all J and the tables of every weight in the family.
AuditReport rebalance_audit(const Context& ctx, const std::vector<i64>& k);

}  // namespace swt
