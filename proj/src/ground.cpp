#include "swt/ground.hpp"

#include <stdexcept>

namespace swt {

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 mulmod(i64 a, i64 b, i64 m) {
  __int128 r = static_cast<__int128>(mod(a, m)) * mod(b, m) % m;
  return static_cast<i64>(r);
}

i64 powmod(i64 base, i64 e, i64 m) {
  if (m == 1) return 0;
  i64 r = 1;
  base = mod(base, m);
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

i64 ipow(i64 base, int e) {
  const i64 limit = i64{1} << 62;
  i64 r = 1;
  for (int i = 0; i < e; ++i) {
    if (base != 0 && r > limit / base) throw std::overflow_error("integer power exceeds 2^62");
    r *= base;
  }
  return r;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

Context make_context(i64 p, int f, int d) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (f < 1) throw std::invalid_argument("f must be >= 1");
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (2 * f > 32) throw std::invalid_argument("f must be <= 16");
  Context c;
  c.p = p;
  c.f = f;
  c.d = d;
  try {
    c.m2 = ipow(p, 2 * f) - 1;
  } catch (const std::overflow_error&) {
    throw std::invalid_argument("p^(2f) exceeds 2^62");
  }
  c.m1 = ipow(p, f) - 1;
  return c;
}

namespace {

using Coeffs = std::vector<i64>;

// Remainder of a modulo monic m over F_p.
Coeffs poly_rem(Coeffs a, const Coeffs& m, i64 p) {
  const int dm = static_cast<int>(m.size()) - 1;
  for (int k = static_cast<int>(a.size()) - 1; k >= dm; --k) {
    i64 c = mod(a[k], p);
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) a[k - dm + j] = mod(a[k - dm + j] - c * m[j], p);
  }
  a.resize(dm);
  for (auto& v : a) v = mod(v, p);
  return a;
}

bool all_zero(const Coeffs& a) {
  for (i64 v : a)
    if (v != 0) return false;
  return true;
}

// Monic polynomials of degree n, lexicographic with coefficients compared low-to-high.
std::vector<Coeffs> monic_of_degree(i64 p, int n) {
  std::vector<Coeffs> out;
  i64 count = ipow(p, n);
  for (i64 idx = 0; idx < count; ++idx) {
    Coeffs c(n + 1, 0);
    i64 v = idx;
    for (int j = n - 1; j >= 0; --j) {
      c[j] = v % p;
      v /= p;
    }
    c[n] = 1;
    out.push_back(c);
  }
  return out;
}

bool irreducible(const Coeffs& m, i64 p) {
  const int d = static_cast<int>(m.size()) - 1;
  for (int k = 1; 2 * k <= d; ++k)
    for (const auto& g : monic_of_degree(p, k))
      if (all_zero(poly_rem(m, g, p))) return false;
  return true;
}

}  // namespace

std::string FieldSpec::str() const {
  std::string s = "F_" + std::to_string(p) + "^" + std::to_string(d) + "[";
  for (std::size_t j = 0; j < modulus.size(); ++j) s += (j ? "," : "") + std::to_string(modulus[j]);
  return s + "]";
}

FieldPtr make_field(i64 p, int d) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  auto spec = std::make_shared<FieldSpec>();
  spec->p = p;
  spec->d = d;
  if (d == 1) {
    spec->modulus = {0, 1};
    return spec;
  }
  for (const auto& m : monic_of_degree(p, d)) {
    if (irreducible(m, p)) {
      spec->modulus = m;
      return spec;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldElem::FieldElem(FieldPtr spec, std::vector<i64> coeffs) : spec_(std::move(spec)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != spec_->d) throw std::invalid_argument("field element has wrong length");
  for (auto& v : c_) v = mod(v, spec_->p);
}

FieldElem FieldElem::zero(const FieldPtr& spec) { return FieldElem(spec, std::vector<i64>(spec->d, 0)); }

FieldElem FieldElem::one(const FieldPtr& spec) { return from_int(spec, 1); }

FieldElem FieldElem::from_int(const FieldPtr& spec, i64 v) {
  std::vector<i64> c(spec->d, 0);
  c[0] = v;
  return FieldElem(spec, c);
}

bool FieldElem::is_zero() const { return all_zero(c_); }

bool FieldElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return false;
  return true;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  std::vector<i64> r(c_.size());
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = c_[j] + o.c_[j];
  return FieldElem(spec_, r);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  std::vector<i64> r(c_.size());
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = c_[j] - o.c_[j];
  return FieldElem(spec_, r);
}

FieldElem FieldElem::operator-() const { return zero(spec_) - *this; }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  const int d = spec_->d;
  Coeffs prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) prod[i + j] = mod(prod[i + j] + c_[i] * o.c_[j], spec_->p);
  return FieldElem(spec_, poly_rem(prod, spec_->modulus, spec_->p));
}

FieldElem FieldElem::pow(i64 e) const {
  FieldElem r = one(spec_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return pow(ipow(spec_->p, spec_->d) - 2);
}

bool FieldElem::operator==(const FieldElem& o) const { return c_ == o.c_; }

std::string FieldElem::str() const {
  if (c_.size() == 1) return std::to_string(c_[0]);
  std::string s = "[";
  for (std::size_t j = 0; j < c_.size(); ++j) s += (j ? "," : "") + std::to_string(c_[j]);
  return s + "]";
}

FieldElem frobenius(const FieldElem& x) { return x.pow(x.spec()->p); }

std::vector<FieldElem> field_elements(const FieldPtr& spec) {
  std::vector<FieldElem> out;
  i64 count = ipow(spec->p, spec->d);
  for (i64 idx = 0; idx < count; ++idx) {
    std::vector<i64> c(spec->d);
    i64 v = idx;
    for (int j = 0; j < spec->d; ++j) {
      c[j] = v % spec->p;
      v /= spec->p;
    }
    out.emplace_back(spec, c);
  }
  return out;
}

std::vector<FieldElem> field_units(const FieldPtr& spec) {
  auto all = field_elements(spec);
  all.erase(all.begin());
  return all;
}

UPoly::UPoly(FieldPtr spec, std::vector<FieldElem> coeffs) : spec_(std::move(spec)), c_(std::move(coeffs)) {
  trim();
}

UPoly UPoly::monomial(const FieldElem& c, int deg) {
  if (deg < 0) throw std::invalid_argument("negative degree");
  UPoly r(c.spec());
  if (c.is_zero()) return r;
  r.c_.assign(deg + 1, FieldElem::zero(c.spec()));
  r.c_[deg] = c;
  return r;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int UPoly::valuation() const {
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (!c_[j].is_zero()) return static_cast<int>(j);
  return kInfiniteValuation;
}

FieldElem UPoly::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return FieldElem::zero(spec_);
  return c_[j];
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::size_t n = std::max(c_.size(), o.c_.size());
  std::vector<FieldElem> r;
  for (std::size_t j = 0; j < n; ++j) r.push_back(coeff(int(j)) + o.coeff(int(j)));
  return UPoly(spec_, r);
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::size_t n = std::max(c_.size(), o.c_.size());
  std::vector<FieldElem> r;
  for (std::size_t j = 0; j < n; ++j) r.push_back(coeff(int(j)) - o.coeff(int(j)));
  return UPoly(spec_, r);
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly(spec_);
  std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, FieldElem::zero(spec_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
  }
  return UPoly(spec_, r);
}

UPoly UPoly::operator*(const FieldElem& c) const {
  std::vector<FieldElem> r;
  for (const auto& x : c_) r.push_back(x * c);
  return UPoly(spec_, r);
}

UPoly UPoly::shift(int n) const {
  if (n < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return *this;
  std::vector<FieldElem> r(n, FieldElem::zero(spec_));
  r.insert(r.end(), c_.begin(), c_.end());
  return UPoly(spec_, r);
}

bool UPoly::operator==(const UPoly& o) const { return c_ == o.c_; }

std::string UPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += c_[j].str();
    if (j > 0) s += "*u^" + std::to_string(j);
  }
  return s;
}

UPoly div_exact(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  auto spec = a.spec();
  std::vector<FieldElem> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) {
    if (!a.is_zero()) throw std::domain_error("inexact polynomial division");
    return UPoly(spec);
  }
  std::vector<FieldElem> q(a.degree() - db + 1, FieldElem::zero(spec));
  FieldElem lead_inv = b.coeffs().back().inv();
  for (int k = a.degree(); k >= db; --k) {
    FieldElem c = rem[k] * lead_inv;
    q[k - db] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - c * b.coeffs()[j];
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return UPoly(spec, q);
}

UPoly poly_phi(const UPoly& P) {
  if (P.is_zero()) return P;
  auto spec = P.spec();
  const int p = static_cast<int>(spec->p);
  std::vector<FieldElem> r(P.degree() * p + 1, FieldElem::zero(spec));
  for (int j = 0; j <= P.degree(); ++j) r[j * p] = frobenius(P.coeffs()[j]);
  return UPoly(spec, r);
}

}  // namespace swt
