#include "ecc/bitcore.hpp"

#include <algorithm>
#include <bit>

namespace ecc {

BitString::BitString(int len, uint32_t value) : len_(len), value_(value) {
  if (len < 1 || len > kMaxLen)
    throw WidthTooLarge("bit string length " + std::to_string(len) +
                        " outside [1, " + std::to_string(kMaxLen) + "]");
  if (len < 32 && (value >> len) != 0)
    throw ParseError("value does not fit in " + std::to_string(len) + " bits");
}

BitString BitString::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty bit string");
  if (static_cast<int>(text.size()) > kMaxLen)
    throw WidthTooLarge("bit string longer than " + std::to_string(kMaxLen));
  uint32_t v = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1')
      throw ParseError("bad character '" + std::string(1, ch) + "' in bit string");
    v = (v << 1) | static_cast<uint32_t>(ch - '0');
  }
  return BitString(static_cast<int>(text.size()), v);
}

int BitString::bit(int j) const {
  if (j < 1 || j > len_) throw LengthMismatch("bit index out of range");
  return static_cast<int>((value_ >> (len_ - j)) & 1u);
}

BitString BitString::with_bit(int j, int v) const {
  if (j < 1 || j > len_) throw LengthMismatch("bit index out of range");
  uint32_t mask = 1u << (len_ - j);
  return BitString(len_, v ? (value_ | mask) : (value_ & ~mask));
}

int BitString::weight() const { return std::popcount(value_); }

BitString BitString::operator^(const BitString& o) const {
  if (len_ != o.len_) throw LengthMismatch("xor of bit strings of unequal length");
  return BitString(len_, value_ ^ o.value_);
}

BitString BitString::complement() const {
  uint32_t mask = (len_ == 32) ? ~0u : ((1u << len_) - 1u);
  return BitString(len_, value_ ^ mask);
}

std::string BitString::str() const {
  std::string s(static_cast<size_t>(len_), '0');
  for (int j = 1; j <= len_; ++j)
    if (bit(j)) s[static_cast<size_t>(j - 1)] = '1';
  return s;
}

int hamming(const BitString& a, const BitString& b) { return (a ^ b).weight(); }

std::string promise_label_name(PromiseLabel label) {
  switch (label) {
    case PromiseLabel::EvenClass: return "EvenClass";
    case PromiseLabel::OddClass: return "OddClass";
    case PromiseLabel::HammingOdd2: return "HammingOdd2";
    case PromiseLabel::HammingEven2: return "HammingEven2";
    case PromiseLabel::MixedUnion: return "MixedUnion";
    case PromiseLabel::Explicit: return "Explicit";
  }
  return "?";
}

bool PromiseSet::contains(const BitString& v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

bool PromiseSet::subset_of(const PromiseSet& o) const {
  return std::includes(o.members.begin(), o.members.end(), members.begin(),
                       members.end());
}

bool PromiseSet::same_members(const PromiseSet& o) const {
  return m == o.m && members == o.members;
}

namespace {

constexpr int kMaxPromiseWidth = 20;

void check_promise_width(int m) {
  if (m < 1 || m > kMaxPromiseWidth)
    throw WidthTooLarge("promise width " + std::to_string(m) + " outside [1, " +
                        std::to_string(kMaxPromiseWidth) + "]");
}

}  // namespace

PromiseSet parity_class(int m, int parity) {
  check_promise_width(m);
  PromiseSet out;
  out.m = m;
  out.label = parity ? PromiseLabel::OddClass : PromiseLabel::EvenClass;
  for (uint32_t v = 0; v < (1u << m); ++v) {
    BitString b(m, v);
    if (b.parity() == (parity & 1)) out.members.push_back(b);
  }
  return out;
}

PromiseSet hamming_promise(const BitString& u, HammingKind kind) {
  check_promise_width(u.length());
  PromiseSet out;
  out.m = u.length();
  out.label = kind == HammingKind::OddMultipleOf2 ? PromiseLabel::HammingOdd2
                                                  : PromiseLabel::HammingEven2;
  out.anchor = u;
  for (uint32_t v = 0; v < (1u << u.length()); ++v) {
    BitString b(u.length(), v);
    if (b.parity() != u.parity()) continue;
    int d = hamming(u, b);
    // The odd-multiple kind is the minterm u itself plus distances 2, 6, ...;
    // the even-multiple kind is distances 0, 4, 8, ... (so it includes u too).
    bool keep = kind == HammingKind::OddMultipleOf2 ? (d == 0 || d % 4 == 2)
                                                    : (d % 4 == 0);
    if (keep) out.members.push_back(b);
  }
  return out;
}

PromiseSet explicit_promise(std::vector<BitString> members) {
  if (members.empty()) throw ParseError("empty promise set");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  int m = members.front().length();
  for (const auto& b : members)
    if (b.length() != m) throw LengthMismatch("promise members of unequal length");
  PromiseSet out;
  out.m = m;
  out.label = PromiseLabel::Explicit;
  out.members = std::move(members);
  return out;
}

PromiseSet mixed_union(const PromiseSet& a) {
  for (const auto& b : a.members)
    if (b.parity() != 0) throw ParityMismatch("minterm set must be even parity");
  PromiseSet odd = parity_class(a.m, 1);
  PromiseSet out;
  out.m = a.m;
  out.label = PromiseLabel::MixedUnion;
  out.members.reserve(a.members.size() + odd.members.size());
  std::merge(a.members.begin(), a.members.end(), odd.members.begin(),
             odd.members.end(), std::back_inserter(out.members));
  return out;
}

}  // namespace ecc
