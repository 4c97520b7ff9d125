#pragma once
// Fixed-width bit patterns plus the parity / Hamming-distance promise sets
// that the protocols are defined over.
//
// Bits are numbered 1..m from the left: bit j belongs to party j, matching
// the tuple convention x^1 x^2 ... x^m. The packed value reads the pattern
// as a big-endian integer, so "011" has value 3. The same value doubles as
// the basis-state index in the statevector engine.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecc/errors.hpp"

namespace ecc {

class BitString {
 public:
  static constexpr int kMaxLen = 24;

  BitString() : len_(0), value_(0) {}
  BitString(int len, uint32_t value);

  static BitString zeros(int len) { return BitString(len, 0); }
  static BitString parse(std::string_view text);

  int length() const { return len_; }
  uint32_t value() const { return value_; }

  // 1-based, bit 1 is the leftmost character.
  int bit(int j) const;
  BitString with_bit(int j, int v) const;

  int weight() const;
  int parity() const { return weight() & 1; }

  BitString operator^(const BitString& o) const;
  BitString complement() const;

  std::string str() const;

  bool operator==(const BitString& o) const = default;
  // Orders by length first, then numeric value; within one width this is
  // plain ascending numeric order.
  auto operator<=>(const BitString& o) const = default;

 private:
  int len_;
  uint32_t value_;
};

int hamming(const BitString& a, const BitString& b);

enum class PromiseLabel {
  EvenClass,
  OddClass,
  HammingOdd2,
  HammingEven2,
  MixedUnion,
  Explicit,
};

std::string promise_label_name(PromiseLabel label);

// A materialized promise set: every member explicitly listed, sorted
// ascending. anchor carries the reference pattern u for the Hamming-distance
// labels so consumers can recover it without re-deriving.
struct PromiseSet {
  int m = 0;
  PromiseLabel label = PromiseLabel::Explicit;
  std::optional<BitString> anchor;
  std::vector<BitString> members;

  bool contains(const BitString& v) const;
  size_t size() const { return members.size(); }
  BitString smallest() const { return members.front(); }

  bool subset_of(const PromiseSet& o) const;
  bool same_members(const PromiseSet& o) const;
};

// All m-bit strings of the given parity (0 even, 1 odd), 2^(m-1) members.
PromiseSet parity_class(int m, int parity);

enum class HammingKind {
  OddMultipleOf2,   // {u} plus members at distance 2, 6, 10, ... from u
  EvenMultipleOf2,  // members at distance 0, 4, 8, ... from u (includes u)
};

// Same-parity neighbours of u filtered by distance class. Both kinds stay
// inside u's parity class; distances within one class are always even.
PromiseSet hamming_promise(const BitString& u, HammingKind kind);

PromiseSet explicit_promise(std::vector<BitString> members);

// A given as even-parity minterm set, returns A together with the full odd
// parity class (the promise of the mixed-parity functions).
PromiseSet mixed_union(const PromiseSet& a);

}  // namespace ecc
