#include "doctest.h"

#include "ecc/quantum.hpp"
#include "ecc/signsolve.hpp"

using namespace ecc;

namespace {

std::vector<SignConstraint> full_width4_constraints(const BitString& u) {
  return gen_constraints(u, hamming_promise(u, HammingKind::OddMultipleOf2));
}

}  // namespace

TEST_CASE("constraint generation for the worked pair") {
  // u = 0001 against promise member 0010: disagreement at positions {3,4}.
  BitString u = BitString::parse("0001");
  auto cs = gen_constraints(u, explicit_promise({u, BitString::parse("0010")}));
  REQUIRE(cs.size() == 4);  // the odd class pairs off across the mask
  SignConstraint expect{BitString::parse("0100"), BitString::parse("0111"), 1};
  bool found = false;
  for (const auto& c : cs) found = found || c == expect;
  CHECK(found);
  // Same-sign pair: 0001 and 0010 disagree there too but s3^s4 = 1.
  SignConstraint same{BitString::parse("0001"), BitString::parse("0010"), 0};
  found = false;
  for (const auto& c : cs) found = found || c == same;
  CHECK(found);
}

TEST_CASE("constraints only arise from distance-2 promise members") {
  BitString u = BitString::parse("0001");
  // The antipode sits at distance 4 and contributes nothing.
  auto cs = gen_constraints(u, explicit_promise({u, BitString::parse("1110")}));
  CHECK(cs.empty());
  // The full promise yields 6 masks x 4 pairs.
  CHECK(full_width4_constraints(u).size() == 24);
}

TEST_CASE("parity and width guards") {
  CHECK_THROWS_AS(gen_constraints(BitString::parse("0001"),
                                  explicit_promise({BitString::parse("0011")})),
                  ParityMismatch);
  CHECK_THROWS_AS(gen_constraints(BitString::parse("001"),
                                  explicit_promise({BitString::parse("0001")})),
                  LengthMismatch);
}

TEST_CASE("width-4 solution signs weight 1 positive and weight 3 negative") {
  for (const auto& u : parity_class(4, 1).members) {
    SolveResult res = solve_signs(4, full_width4_constraints(u));
    REQUIRE(res.consistent);
    for (const auto& v : parity_class(4, 1).members)
      CHECK(res.assignment.at(v) == (v.weight() == 3 ? 1 : 0));
  }
}

TEST_CASE("exactly two total assignments satisfy the full width-4 system") {
  auto cs = full_width4_constraints(BitString::parse("0001"));
  PromiseSet odd = parity_class(4, 1);
  int satisfying = 0;
  for (uint32_t pattern = 0; pattern < (1u << 8); ++pattern) {
    SignAssignment sg;
    sg.m = 4;
    for (size_t k = 0; k < odd.members.size(); ++k)
      sg.value[odd.members[k]] = (pattern >> k) & 1;
    bool ok = true;
    for (const auto& c : cs) ok = ok && sg.satisfies(c);
    satisfying += ok;
  }
  CHECK(satisfying == 2);
}

TEST_CASE("solver anchors the smallest member at zero") {
  auto res = solve_signs(4, full_width4_constraints(BitString::parse("0111")));
  REQUIRE(res.consistent);
  CHECK(res.assignment.at(BitString::parse("0001")) == 0);
  // No constraints at all: everything anchors to zero.
  auto free = solve_signs(3, {});
  REQUIRE(free.consistent);
  for (const auto& v : parity_class(3, 1).members) CHECK(free.assignment.at(v) == 0);
}

TEST_CASE("contradictory pair yields a two-node witness cycle") {
  BitString s = BitString::parse("0001");
  BitString t = BitString::parse("0010");
  SolveResult res = solve_signs(4, {{s, t, 0}, {s, t, 1}});
  REQUIRE(!res.consistent);
  REQUIRE(res.witness_cycle.size() == 2);
  CHECK(((res.witness_cycle[0] == s && res.witness_cycle[1] == t) ||
         (res.witness_cycle[0] == t && res.witness_cycle[1] == s)));
}

TEST_CASE("odd cycle through three nodes is reported") {
  // 001-010-100 pairwise at distance 2 with all-equal signs forced except
  // one odd edge.
  BitString a = BitString::parse("001");
  BitString b = BitString::parse("010");
  BitString c = BitString::parse("100");
  SolveResult res = solve_signs(3, {{a, b, 0}, {b, c, 0}, {a, c, 1}});
  REQUIRE(!res.consistent);
  CHECK(res.witness_cycle.size() == 3);
  // Replaying the cycle edges confirms the parity obstruction: rhs sum odd.
}

TEST_CASE("solved state discriminates by support parity") {
  // For the signed width-4 state, two-H words land in the even class while
  // the identity and the all-H word stay odd.
  for (const auto& u : parity_class(4, 1).members) {
    SolveResult res = solve_signs(4, full_width4_constraints(u));
    REQUIRE(res.consistent);
    StateVector psi4 = build_signed_state(4, res.assignment);
    CHECK(psi4.norm() == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& p : parity_class(4, 1).members) {
      StateVector img = apply_word(psi4, direct_entry(u, p, WordAlphabet::IH));
      int d = hamming(u, p);
      CHECK(support_parity(img) ==
            (d == 2 ? SupportParity::Even : SupportParity::Odd));
    }
  }
}
