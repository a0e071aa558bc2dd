#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace swt {

// Subset of Z/nZ, n <= 32.
struct IndexSet {
  int n = 0;
  std::uint32_t bits = 0;

  IndexSet() = default;
  IndexSet(int n_, std::uint32_t b) : n(n_), bits(b & full_mask(n_)) {}
  static IndexSet empty(int n) { return {n, 0u}; }
  static IndexSet full(int n) { return {n, full_mask(n)}; }
  static IndexSet of(int n, const std::vector<int>& idx);

  static std::uint32_t full_mask(int n) { return n >= 32 ? 0xffffffffu : ((1u << n) - 1u); }

  bool has(int i) const { return (bits >> wrap(i)) & 1u; }
  int wrap(int i) const { return ((i % n) + n) % n; }
  void set(int i, bool v = true) {
    if (v) bits |= 1u << wrap(i);
    else bits &= ~(1u << wrap(i));
  }
  IndexSet with(int i, bool v = true) const {
    IndexSet r = *this;
    r.set(i, v);
    return r;
  }
  int size() const { return __builtin_popcount(bits); }
  bool is_empty() const { return bits == 0; }
  std::vector<int> members() const;

  IndexSet operator|(IndexSet o) const { return {n, bits | o.bits}; }
  IndexSet operator&(IndexSet o) const { return {n, bits & o.bits}; }
  IndexSet operator-(IndexSet o) const { return {n, bits & ~o.bits}; }
  IndexSet operator^(IndexSet o) const { return {n, bits ^ o.bits}; }
  IndexSet complement() const { return {n, ~bits}; }
  bool subset_of(IndexSet o) const { return (bits & ~o.bits) == 0; }
  bool operator==(const IndexSet& o) const = default;

  std::string str() const;
};

// "0,2,3" -> {0,2,3}; empty string -> empty set.
IndexSet parse_index_set(int n, const std::string& text);

}  // namespace swt
