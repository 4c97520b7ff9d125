#include "doctest.h"

#include "ecc/bitcore.hpp"

using namespace ecc;

TEST_CASE("bit numbering is 1-based from the left") {
  BitString b = BitString::parse("0110");
  CHECK(b.length() == 4);
  CHECK(b.value() == 6);
  CHECK(b.bit(1) == 0);
  CHECK(b.bit(2) == 1);
  CHECK(b.bit(3) == 1);
  CHECK(b.bit(4) == 0);
  CHECK(b.str() == "0110");
  CHECK(b.with_bit(1, 1).str() == "1110");
  CHECK(b.complement().str() == "1001");
}

TEST_CASE("parse rejects junk") {
  CHECK_THROWS_AS(BitString::parse(""), ParseError);
  CHECK_THROWS_AS(BitString::parse("01x"), ParseError);
  CHECK_THROWS_AS(BitString::parse(std::string(40, '0')), WidthTooLarge);
}

TEST_CASE("xor, weight, parity, hamming") {
  BitString a = BitString::parse("0011");
  BitString b = BitString::parse("0101");
  CHECK((a ^ b).str() == "0110");
  CHECK(a.weight() == 2);
  CHECK(a.parity() == 0);
  CHECK(BitString::parse("0111").parity() == 1);
  CHECK(hamming(a, b) == 2);
  CHECK_THROWS_AS(hamming(a, BitString::parse("000")), LengthMismatch);
}

TEST_CASE("hamming distance mod 2 equals parity xor") {
  for (int m = 1; m <= 6; ++m)
    for (uint32_t x = 0; x < (1u << m); ++x)
      for (uint32_t y = 0; y < (1u << m); ++y) {
        BitString a(m, x), b(m, y);
        CHECK(hamming(a, b) % 2 == (a.parity() ^ b.parity()));
      }
}

TEST_CASE("parity classes partition the cube") {
  for (int m = 1; m <= 10; ++m) {
    PromiseSet even = parity_class(m, 0);
    PromiseSet odd = parity_class(m, 1);
    CHECK(even.size() == (size_t{1} << (m - 1)));
    CHECK(odd.size() == (size_t{1} << (m - 1)));
    for (const auto& v : even.members) CHECK(v.parity() == 0);
    for (const auto& v : odd.members) CHECK(v.parity() == 1);
    for (uint32_t x = 0; x < (1u << m); ++x) {
      BitString b(m, x);
      CHECK((even.contains(b) ^ odd.contains(b)) == 1);
    }
  }
}

TEST_CASE("three-bit parity classes in ascending order") {
  PromiseSet even = parity_class(3, 0);
  REQUIRE(even.size() == 4);
  CHECK(even.members[0].str() == "000");
  CHECK(even.members[1].str() == "011");
  CHECK(even.members[2].str() == "101");
  CHECK(even.members[3].str() == "110");
  CHECK(even.label == PromiseLabel::EvenClass);
}

TEST_CASE("odd-multiple distance promise of 0001") {
  PromiseSet ps = hamming_promise(BitString::parse("0001"), HammingKind::OddMultipleOf2);
  PromiseSet odd4 = parity_class(4, 1);
  // The whole odd class except the antipode 1110.
  REQUIRE(ps.size() == 7);
  for (const auto& v : ps.members) {
    CHECK(odd4.contains(v));
    CHECK(v.str() != "1110");
  }
  CHECK(ps.label == PromiseLabel::HammingOdd2);
  REQUIRE(ps.anchor.has_value());
  CHECK(ps.anchor->str() == "0001");
}

TEST_CASE("even-multiple distance promise at width 4 is the antipodal pair") {
  for (uint32_t x = 0; x < 16; ++x) {
    BitString u(4, x);
    PromiseSet ps = hamming_promise(u, HammingKind::EvenMultipleOf2);
    REQUIRE(ps.size() == 2);
    CHECK(ps.contains(u));
    CHECK(ps.contains(u.complement()));
  }
}

TEST_CASE("hamming promises match direct enumeration up to width 10") {
  for (int m = 3; m <= 10; ++m) {
    for (uint32_t seed : {0u, 1u, (1u << m) - 1u, 5u % (1u << m)}) {
      BitString u(m, seed);
      PromiseSet oddmul = hamming_promise(u, HammingKind::OddMultipleOf2);
      PromiseSet evenmul = hamming_promise(u, HammingKind::EvenMultipleOf2);
      for (uint32_t x = 0; x < (1u << m); ++x) {
        BitString v(m, x);
        bool same_parity = v.parity() == u.parity();
        int d = hamming(u, v);
        CHECK(oddmul.contains(v) == (same_parity && (d == 0 || d % 4 == 2)));
        CHECK(evenmul.contains(v) == (same_parity && d % 4 == 0));
      }
      CHECK(oddmul.contains(u));  // the minterm itself always belongs
    }
  }
}

TEST_CASE("explicit promise sorts, dedups and validates") {
  PromiseSet ps = explicit_promise({BitString::parse("10"), BitString::parse("01"),
                                    BitString::parse("10")});
  REQUIRE(ps.size() == 2);
  CHECK(ps.members[0].str() == "01");
  CHECK(ps.members[1].str() == "10");
  CHECK_THROWS_AS(explicit_promise({BitString::parse("10"), BitString::parse("100")}),
                  LengthMismatch);
}

TEST_CASE("mixed union glues A onto the odd class") {
  PromiseSet a = explicit_promise({BitString::parse("000"), BitString::parse("011")});
  PromiseSet mixed = mixed_union(a);
  CHECK(mixed.size() == 6);
  CHECK(mixed.contains(BitString::parse("000")));
  CHECK(mixed.contains(BitString::parse("111")));
  CHECK(!mixed.contains(BitString::parse("101")));
  CHECK_THROWS_AS(mixed_union(explicit_promise({BitString::parse("001")})),
                  ParityMismatch);
}
