#pragma once
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "swt/fchar.hpp"
#include "swt/ground.hpp"
#include "swt/sets.hpp"

namespace swt {

using Rational = boost::rational<i64>;

// phi(e_{i-1}) = (a)_i u^{r_i} e_i, with (a)_0 = a and (a)_i = 1 otherwise.
struct RankOneKisin {
  std::vector<i64> r;
  FieldElem a;
};

RankOneKisin rank_one(std::vector<i64> r, FieldElem a);

// (1/(p^f-1)) sum_{j=1}^{f} p^{f-j} s_{(j+i) mod f}
Rational alpha_seq(const Context& ctx, const std::vector<i64>& s, int i);
Rational alpha(const Context& ctx, const RankOneKisin& N, int i);
Rational alpha_diff(const Context& ctx, const RankOneKisin& N1, const RankOneKisin& N2, int i);
// alpha_diff as an integer; std::domain_error if not integral.
i64 alpha_int(const Context& ctx, const std::vector<i64>& s1, const std::vector<i64>& s2, int i);

bool hom_exists(const Context& ctx, const RankOneKisin& N1, const RankOneKisin& N2);
InertialChar inertial_char(const Context& ctx, const RankOneKisin& N);
bool tS_iso(const Context& ctx, const RankOneKisin& N1, const RankOneKisin& N2);

bool in_Pprime(const Context& ctx, const std::vector<i64>& r);

enum class StringKind { Zero, Plus, Minus };  // Plus: (-1, p-1, ..., p-1, p); Minus: its negative

struct CyclicString {
  int begin = 0;
  int length = 0;
  StringKind kind = StringKind::Zero;
  bool operator==(const CyclicString&) const = default;
};

struct CyclicDecomposition {
  int flag = 0;  // +1 / -1 for +-(p-1, ..., p-1); 0 otherwise
  std::vector<CyclicString> strings;
};

std::optional<CyclicDecomposition> try_decompose_cyclic(const Context& ctx, const std::vector<i64>& r);
// std::invalid_argument if sum p^{f-1-i} r_i is not 0 mod p^f-1.
CyclicDecomposition decompose_cyclic(const Context& ctx, const std::vector<i64>& r);
std::vector<i64> recompose(const Context& ctx, const CyclicDecomposition& dec);

bool necessary_map_conditions(const Context& ctx, const std::vector<i64>& r, IndexSet J);

std::vector<i64> h_of(const std::vector<i64>& r, IndexSet J);
i64 h_value(const Context& ctx, const std::vector<i64>& r, IndexSet J);
IndexSet jmax(const Context& ctx, const std::vector<i64>& r, IndexSet J);

struct ExtensionType {
  std::vector<i64> r;
  FieldElem a, b;
  IndexSet J;

  std::vector<i64> h() const { return h_of(r, J); }
  RankOneKisin quotient() const;  // M(h; a)
  RankOneKisin sub() const;       // M(r - h; b)
};

bool exceptional_case(const Context& ctx, const ExtensionType& ext);
// r_i = h_i = p for every i.
bool all_p_caveat(const Context& ctx, const ExtensionType& ext);

RankOneKisin twist_rank_one(const RankOneKisin& N, const std::vector<i64>& d, const FieldElem& c);

}  // namespace swt
