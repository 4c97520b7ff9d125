#pragma once
// Sign assignments for the odd-parity entangled states.
//
// For two odd-parity patterns s, t at Hamming distance 2 that disagree at
// positions {i, j}, applying H at i and j wipes out the odd-parity part of
// the state exactly when sg(s) XOR sg(t) = 1 XOR s_i XOR s_j. Collecting
// that equation over every distance-2 member of a promise set yields a
// parity-constrained 2-coloring problem over the odd parity class, solved
// here with breadth-first labeling. Components are anchored at their
// numerically smallest member, which gets sign 0; in particular the global
// smallest member always carries sign 0.

#include <map>
#include <vector>

#include "ecc/bitcore.hpp"

namespace ecc {

struct SignConstraint {
  BitString s, t;  // odd parity, hamming(s, t) == 2
  int rhs;         // 1 ^ s_i ^ s_j at the two disagreement positions

  bool operator==(const SignConstraint& o) const = default;
};

// Total map from the odd parity class of width m to {0, 1}; sign bit 1
// means amplitude factor -1.
struct SignAssignment {
  int m = 0;
  std::map<BitString, int> value;

  int at(const BitString& v) const;
  bool satisfies(const SignConstraint& c) const;
};

// One constraint per unordered pair {s, t} of odd-parity patterns whose
// difference is supported exactly on the two positions where u disagrees
// with some promise member at Hamming distance 2. Promise members at other
// distances contribute nothing. u and the promise must share width and
// parity.
std::vector<SignConstraint> gen_constraints(const BitString& u,
                                            const PromiseSet& promise);

struct SolveResult {
  bool consistent = false;
  SignAssignment assignment;          // total on the odd class when consistent
  std::vector<BitString> witness_cycle;  // odd-rhs cycle when inconsistent
};

SolveResult solve_signs(int m, const std::vector<SignConstraint>& constraints);

}  // namespace ecc
