#pragma once
// Accumulative boolean functions and their inputs.
//
// An instance distributes n bits to each of m parties; column i of that
// matrix is the i-th m-tuple. The function value is the XOR over i of a
// per-tuple term:
//   Fu   - term is 1 iff the tuple equals the single minterm u
//   FB   - term is 1 iff the tuple lies in the minterm set B
//   GA   - term is 1 iff the tuple lies in A (even patterns only; the
//          promise is A together with the whole odd class)
//   G11  - two parties, term is AND of the two bits, promise {01, 10, 11}
// Inputs are only meaningful while every tuple stays inside the promise.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ecc/bitcore.hpp"
#include "ecc/quantum.hpp"

namespace ecc {

enum class Family { Fu, FB, GA, G11 };

std::string family_name(Family f);

struct FunctionSpec {
  Family family = Family::Fu;
  int m = 0;
  int n = 0;
  BitString u;          // Fu only
  PromiseSet minterms;  // B for FB, A for GA
  PromiseSet promise;

  static FunctionSpec single_minterm(const BitString& u, int n, PromiseSet promise);
  static FunctionSpec minterm_set(PromiseSet B, int n, PromiseSet promise);
  static FunctionSpec mixed(PromiseSet A, int n);
  static FunctionSpec two_party_and(int n);

  // Checks the family's structural invariants, throwing on violation.
  void validate() const;

  int term(const BitString& tuple) const;
};

struct InputMatrix {
  int m = 0, n = 0;
  std::vector<BitString> rows;  // rows[j-1] is party j's n input bits

  static InputMatrix from_rows(std::vector<BitString> rows);
  static InputMatrix from_tuples(const std::vector<BitString>& tuples);
  // m lines of n characters over {0, 1}.
  static InputMatrix parse(std::istream& in);

  BitString tuple(int i) const;  // column i, 1-based
  std::string str() const;

  bool operator==(const InputMatrix& o) const = default;
};

// XOR of per-tuple terms. Throws PromiseViolation if any tuple leaves the
// promise.
int oracle_eval(const FunctionSpec& spec, const InputMatrix& inputs);

// 1-based index of the first tuple outside the promise, or 0 if all comply.
int validate_promise(const FunctionSpec& spec, const InputMatrix& inputs);

// Every |promise|^n input matrix exactly once, tuple choices in ascending
// promise order with position 1 varying slowest. Refuses to materialize
// more than cap matrices.
std::vector<InputMatrix> gen_inputs_exhaustive(const FunctionSpec& spec,
                                               uint64_t cap);

std::vector<InputMatrix> gen_inputs_random(const FunctionSpec& spec, int count,
                                           Rng& rng);

// Complements the vectors of every party in the support of u^u2, turning an
// instance of the function anchored at u into one anchored at u2. Involution
// when applied twice.
InputMatrix reduce_instance(const BitString& u, const BitString& u2,
                            const InputMatrix& inputs);

}  // namespace ecc
