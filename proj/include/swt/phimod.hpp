#pragma once
#include <vector>

#include "swt/ground.hpp"
#include "swt/kisin.hpp"

namespace swt {

// Rank-two phi-module 0 -> sub -> M -> quot -> 0 on bases e (sub) and f (quot):
//   phi(e_{i-1}) = (b)_i u^{t_i} e_i
//   phi(f_{i-1}) = (a)_i u^{s_i} f_i + x_i e_i
struct PhiExtension {
  RankOneKisin sub;
  RankOneKisin quot;
  std::vector<UPoly> x;
  bool exceptional = false;

  bool operator==(const PhiExtension& o) const;
};

// Columns are images of the two source basis vectors.
struct Mat2 {
  UPoly m00, m01, m10, m11;
  UPoly det() const { return m00 * m11 - m01 * m10; }
  Mat2 operator*(const Mat2& o) const;
  bool operator==(const Mat2& o) const;
};

// G[i] is the matrix on component i, in the target's (e, f) basis.
struct PhiMorphism {
  std::vector<Mat2> G;
};

// (a)_i
FieldElem slot_constant(const FieldElem& a, int i);
Mat2 phi_matrix(const PhiExtension& M, int i);
Mat2 poly_phi(const Mat2& m);

// General constructor: no normal-form check, exponents must be >= 0.
PhiExtension make_extension(RankOneKisin sub, RankOneKisin quot, std::vector<UPoly> x);
// Normal form for a type: x_i = 0 off J or where r_i = 0, constant otherwise.
// With the exceptional flag one entry may be c0 + c1 u^p.
PhiExtension build_extension(const Context& ctx, const ExtensionType& type, std::vector<UPoly> x,
                             bool exceptional = false);

bool check_phi_morphism(const Context& ctx, const PhiMorphism& g, const PhiExtension& src, const PhiExtension& dst);
bool generically_invertible(const PhiMorphism& g);

struct ForwardTransport {
  PhiExtension target;
  PhiMorphism map;  // source -> target
};

// Needs hom sub -> P', hom quot -> N', and alpha_{i-1}(quot, N') = 0 wherever x_i != 0.
ForwardTransport transport_forward(const Context& ctx, const PhiExtension& M, const RankOneKisin& Nprime,
                                   const RankOneKisin& Pprime);

struct ReverseTransport {
  PhiExtension target;     // Ext(N', P')
  PhiExtension middle;     // Ext(quot, P')
  PhiMorphism from_source; // M -> middle
  PhiMorphism from_target; // target -> middle
};

// Needs hom sub -> P', hom N' -> quot, and deg x_i <= 1.
ReverseTransport transport_reverse(const Context& ctx, const PhiExtension& M, const RankOneKisin& Nprime,
                                   const RankOneKisin& Pprime);

// M tensor M(d; c).
PhiExtension twist_extension(const PhiExtension& M, const std::vector<i64>& d, const FieldElem& c);

}  // namespace swt
