#pragma once
#include <string>
#include <vector>

#include "swt/ground.hpp"
#include "swt/sets.hpp"

namespace swt {

struct Weight {
  std::vector<i64> k;
  std::vector<i64> l;
  bool operator==(const Weight&) const = default;
};

Weight weight_of(std::vector<i64> k);  // l = 0

struct HTRow {
  i64 b1 = 0;  // k + l - 1
  i64 b2 = 0;  // l
  bool operator==(const HTRow&) const = default;
};
using HTTable = std::vector<HTRow>;

struct Block {
  std::vector<int> members;  // cyclic order, starting outside J_0
  int nu = -1;               // the M-tilde element
  std::vector<int> tail;     // J_0 part after nu
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<int> block_of;  // index -> block number
};

enum class Rule { Length, Range, AllOne, Regular, TwoOne };

struct Violation {
  Rule rule;
  std::string code;
  std::string message;
};

struct ValidityReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
  // Only the (2,1) rule fails.
  bool only_two_one() const;
};

enum class Strictness { Full, SkipTwoOne };

ValidityReport validate_irregular(const Context& ctx, const std::vector<i64>& k);
// std::invalid_argument listing the violations.
void require_valid(const Context& ctx, const std::vector<i64>& k, Strictness s = Strictness::Full);

IndexSet set_J0(const Context& ctx, const std::vector<i64>& k);
IndexSet set_M(const Context& ctx, const std::vector<i64>& k);
IndexSet set_Mtilde(const Context& ctx, const std::vector<i64>& k);
IndexSet set_Mtilde2(const Context& ctx, const std::vector<i64>& k);

// h_i = p e_{i+1} - e_i, theta_i = p e_{i+1} + e_i
std::vector<i64> h_vector(const Context& ctx, int i);
std::vector<i64> theta_vector(const Context& ctx, int i);

Weight weight_kprime(const Context& ctx, const std::vector<i64>& k, Strictness s = Strictness::Full);
Weight weight_kmu(const Context& ctx, const std::vector<i64>& k, int mu, Strictness s = Strictness::Full);
Weight weight_ktheta(const Context& ctx, const std::vector<i64>& k, Strictness s = Strictness::Full);
Weight weight_ktheta_alt(const Context& ctx, const std::vector<i64>& k);

HTTable ht_table(const Context& ctx, const Weight& w);
// s = b1 on J, b2 off J; t the other entry.
std::pair<std::vector<i64>, std::vector<i64>> st_sequences(const HTTable& table, IndexSet J);

BlockDecomposition blocks(const Context& ctx, const std::vector<i64>& k);

// Tables written directly from the case descriptions.
HTTable closed_form_bprime(const Context& ctx, const std::vector<i64>& k);
HTTable closed_form_bmu(const Context& ctx, const std::vector<i64>& k, int mu);
HTTable closed_form_btheta(const Context& ctx, const std::vector<i64>& k);

// (k, l) -> (k, 0) plus the twist l.
struct NormalizedWeight {
  Weight base;
  std::vector<i64> twist;
};
NormalizedWeight normalize_twist(const Weight& w);

// All valid irregular k in odometer order (index 0 fastest).
std::vector<std::vector<i64>> valid_weights(const Context& ctx);

// Everything derived from a valid irregular k.
struct WeightFamily {
  std::vector<i64> k;
  IndexSet J0, M, Mt, Mt2;
  BlockDecomposition blocks;
  std::vector<int> mus;  // members of M-tilde, ascending
  Weight irregular, prime, theta;
  std::vector<Weight> mu_weights;  // aligned with mus
  HTTable b, bprime, btheta;
  std::vector<HTTable> bmu;

  int mu_slot(int mu) const;
};

WeightFamily make_family(const Context& ctx, const std::vector<i64>& k);

}  // namespace swt
