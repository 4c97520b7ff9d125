#pragma once
// Single-round guessing games over a promise set, searched exhaustively over
// deterministic local strategies.
//
// Each party answers with a function {0,1} -> {0,1} of its own bit; the
// parties win on promise member p when the XOR of their answers equals the
// target bit for p. The search enumerates all 4^m strategy tuples in a
// canonical order (party 1's two answer bits occupy the least significant
// trits of the strategy code) and reports the first winner, so the result
// is deterministic.

#include <map>
#include <optional>

#include "ecc/bitcore.hpp"

namespace ecc {

struct LocalStrategy {
  int answer0 = 0;  // reply to input bit 0
  int answer1 = 0;  // reply to input bit 1

  int answer(int x) const { return x ? answer1 : answer0; }
  bool operator==(const LocalStrategy& o) const = default;
};

struct GameSpec {
  int m = 0;
  PromiseSet promise;
  std::map<BitString, int> target;  // defined on every promise member

  void validate() const;
  // Convenience: target 1 exactly on members of the given set.
  static GameSpec membership(PromiseSet promise, const PromiseSet& ones);
};

struct GameResult {
  bool winnable = false;
  std::vector<LocalStrategy> witness;  // one strategy per party when winnable
};

// True iff the strategies win on every promise member.
bool replay(const GameSpec& game, const std::vector<LocalStrategy>& strategies);

// Exhaustive search over all 4^m deterministic strategy tuples, m <= 12.
GameResult ccf_search(const GameSpec& game);

}  // namespace ecc
