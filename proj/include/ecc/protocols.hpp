#pragma once
// Communication protocols that evaluate the accumulative functions with a
// fixed number of classical bits, plus the exhaustive verifier that replays
// them against the oracle.
//
// Locality is enforced structurally: everything a party contributes is
// computed by the party_* helpers below, whose signatures only admit that
// party's own inputs plus public spec data (the anchor bit u_j, widths).
// The runners orchestrate rounds, move declared messages, and total the
// exact cbit cost in the transcript.

#include <cstdint>
#include <optional>
#include <vector>

#include "ecc/functions.hpp"

namespace ecc {

struct Message {
  int from = 0, to = 0;     // 1-based party indices
  std::vector<int> payload;  // bits
};

struct Transcript {
  std::vector<Message> messages;

  int total_cbits() const;
};

// One party's private slice of a protocol run. Nothing in here refers to
// another party's inputs.
struct PartyView {
  int index = 0;              // 1-based
  BitString input;            // this party's n bits
  std::vector<int> measured;  // measured qubit per position i (entangled)
  std::vector<int> toggles;   // final toggle-register bits (mixed classical)
};

struct ProtocolOutcome {
  int value = 0;  // computed at party 1
  Transcript transcript;
  // Per-position support parity of the post-operation register (entangled
  // runs only); anything other than a pure class means the run was not
  // deterministic.
  std::vector<SupportParity> support_check;
};

// ---- party-local computations -------------------------------------------

// Entangled gate choice. The I/H alphabet applies H where the party's bit
// differs from the anchor bit; the H/HR alphabet applies H on equality and
// HR on difference.
GateSymbol party_gate_ih(int u_bit, int x_bit);
GateSymbol party_gate_hhr(int u_bit, int x_bit);
std::vector<GateSymbol> party_gate_row(int u_bit, const BitString& input,
                                       WordAlphabet alphabet);

// Count of 1 bits in the party's vector, used by the mod-4 protocol.
int party_count_mod4(const BitString& input);

// Mixed-parity protocol: party j's final toggle bit for each position. The
// register starts at the anchor bit (party 1 complements it when m is even
// so the initial pattern has the right parity), flips when the party's input
// differs from the anchor, and flips once more at the end when m is odd.
std::vector<int> party_toggle_bits(int m, int j, int u_bit, const BitString& input);

int xor_bits(const std::vector<int>& bits);

// ---- runners --------------------------------------------------------------

enum class EntangledBackend { Auto, Psi3, Psi4, Ghz };

std::string backend_name(EntangledBackend b);

// Entanglement-assisted evaluation, m-1 cbits (parties 2..m each report one
// XOR bit). Backend resolution when Auto:
//   Psi3 - m == 3, single even minterm, promise inside the even class
//   Psi4 - m == 4, odd anchor; single minterm with the antipode excluded,
//          or the pair {u, ~u} as minterm set over the odd class
//   Ghz  - any m >= 3; single minterm with promise inside the odd-multiple
//          distance set of u, or minterm set equal to the even-multiple
//          distance set of its anchor
// A non-Auto backend must still pass its own applicability check.
ProtocolOutcome run_entangled(const FunctionSpec& spec, const InputMatrix& inputs,
                              Rng& rng,
                              EntangledBackend backend = EntangledBackend::Auto);

// Classical counting protocol for a single minterm over the odd-multiple
// distance promise, 2m-3 cbits: parties 2..m-1 send their 1-count mod 4,
// party m sends only the high bit, party 1 reconstructs the missing low bit
// from the promise's global parity.
ProtocolOutcome run_classical_mod4(const FunctionSpec& spec,
                                   const InputMatrix& inputs);

// Mixed-parity classical protocol: GA in m-1 cbits, G11 in 1 cbit.
ProtocolOutcome run_classical_mixed(const FunctionSpec& spec,
                                    const InputMatrix& inputs);

// ---- verification -----------------------------------------------------------

enum class Runner { Entangled, ClassicalMod4, ClassicalMixed };

std::string runner_name(Runner r);

struct Coverage {
  bool exhaustive = true;
  uint64_t cap = 1u << 20;  // exhaustive mode refuses beyond this
  int samples = 0;          // random mode
  uint64_t seed = 0;
};

struct VerifyReport {
  uint64_t trials = 0;
  uint64_t mismatches = 0;
  int min_cbits = 0;
  int max_cbits = 0;
  uint64_t support_violations = 0;
};

// Replays the chosen runner against oracle_eval over the requested input
// coverage. Each trial draws measurement randomness from Rng(seed + trial
// index), so reports do not depend on scheduling; ENTANGLE_CC_THREADS caps
// the worker count (default 1).
VerifyReport verify(const FunctionSpec& spec, Runner runner, const Coverage& cov,
                    EntangledBackend backend = EntangledBackend::Auto);

}  // namespace ecc
