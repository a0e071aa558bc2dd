#pragma once
#include <vector>

#include "swt/ground.hpp"

namespace swt {

// Character of tame inertia, stored as an exponent of the niveau-n fundamental
// character omega_0, modulo p^{nf} - 1.
struct InertialChar {
  int niveau = 1;
  i64 exponent = 0;
  i64 modulus = 2;

  bool is_trivial() const { return exponent == 0; }
};

i64 niveau_modulus(const Context& ctx, int niveau);

// sum_i r_i p^{nf-1-i} mod p^{nf}-1, r has length nf.
InertialChar char_of_exponents(const Context& ctx, const std::vector<i64>& r, int niveau = 1);
InertialChar char_from_exponent(const Context& ctx, i64 e, int niveau = 1);

InertialChar char_mul(const InertialChar& a, const InertialChar& b);
InertialChar char_inv(const InertialChar& a);
bool char_eq(const InertialChar& a, const InertialChar& b);

// Restriction along the norm: exponent times (p^f + 1).
InertialChar extend_to_quadratic(const Context& ctx, const InertialChar& chi);
// chi^{p^f} != chi
bool is_irreducible_pair(const Context& ctx, const InertialChar& chi);

// Unordered pair of niveau-1 characters.
struct SemisimpleShape {
  InertialChar a, b;
  bool operator==(const SemisimpleShape& o) const;
};

}  // namespace swt
