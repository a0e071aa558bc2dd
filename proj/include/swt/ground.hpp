#pragma once
#include <climits>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace swt {

using i64 = std::int64_t;

i64 mod(i64 a, i64 m);
i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 base, i64 e, i64 m);
// Throws std::overflow_error past 2^62.
i64 ipow(i64 base, int e);
bool is_prime(i64 n);

struct Context {
  i64 p = 3;
  int f = 1;
  int d = 1;
  i64 m1 = 2;  // p^f - 1
  i64 m2 = 8;  // p^{2f} - 1
};

// p odd prime, f >= 1, d >= 1, p^{2f} < 2^62.
Context make_context(i64 p, int f, int d = 1);

struct FieldSpec {
  i64 p;
  int d;
  std::vector<i64> modulus;  // monic, low-to-high, size d+1
  std::string str() const;
};
using FieldPtr = std::shared_ptr<const FieldSpec>;

FieldPtr make_field(i64 p, int d);

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr spec, std::vector<i64> coeffs);
  static FieldElem zero(const FieldPtr& spec);
  static FieldElem one(const FieldPtr& spec);
  static FieldElem from_int(const FieldPtr& spec, i64 v);

  const FieldPtr& spec() const { return spec_; }
  const std::vector<i64>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem pow(i64 e) const;
  FieldElem inv() const;  // std::domain_error on zero
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  bool operator<(const FieldElem& o) const { return c_ < o.c_; }

  std::string str() const;

 private:
  FieldPtr spec_;
  std::vector<i64> c_;
};

FieldElem frobenius(const FieldElem& x);
std::vector<FieldElem> field_elements(const FieldPtr& spec);
std::vector<FieldElem> field_units(const FieldPtr& spec);

// Polynomials in u over F_{p^d}; coefficients low-to-high, no trailing zeros.
class UPoly {
 public:
  static constexpr int kInfiniteValuation = INT_MAX;

  explicit UPoly(FieldPtr spec) : spec_(std::move(spec)) {}
  UPoly(FieldPtr spec, std::vector<FieldElem> coeffs);
  static UPoly monomial(const FieldElem& c, int deg);
  static UPoly constant(const FieldElem& c) { return monomial(c, 0); }

  const FieldPtr& spec() const { return spec_; }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int valuation() const;
  FieldElem coeff(int j) const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const FieldElem& c) const;
  UPoly shift(int n) const;  // times u^n
  bool operator==(const UPoly& o) const;
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void trim();
  FieldPtr spec_;
  std::vector<FieldElem> c_;
};

// Exact quotient; std::domain_error if the remainder is nonzero.
UPoly div_exact(const UPoly& a, const UPoly& b);
// c u^j -> frobenius(c) u^{pj}
UPoly poly_phi(const UPoly& P);

}  // namespace swt
