#include "ecc/games.hpp"

namespace ecc {

void GameSpec::validate() const {
  if (promise.m != m) throw LengthMismatch("promise width differs from m");
  if (promise.members.empty()) throw ParseError("empty promise");
  for (const auto& p : promise.members)
    if (!target.count(p))
      throw IncompleteAssignment("no target for promise member " + p.str());
}

GameSpec GameSpec::membership(PromiseSet promise, const PromiseSet& ones) {
  GameSpec game;
  game.m = promise.m;
  for (const auto& p : promise.members)
    game.target[p] = ones.contains(p) ? 1 : 0;
  game.promise = std::move(promise);
  game.validate();
  return game;
}

bool replay(const GameSpec& game, const std::vector<LocalStrategy>& strategies) {
  if (static_cast<int>(strategies.size()) != game.m)
    throw LengthMismatch("one strategy per party required");
  for (const auto& p : game.promise.members) {
    int acc = 0;
    for (int j = 1; j <= game.m; ++j)
      acc ^= strategies[static_cast<size_t>(j - 1)].answer(p.bit(j));
    if (acc != game.target.at(p)) return false;
  }
  return true;
}

GameResult ccf_search(const GameSpec& game) {
  game.validate();
  if (game.m > 12)
    throw SearchTooLarge("strategy space 4^m too large beyond m = 12");

  std::vector<LocalStrategy> strategies(static_cast<size_t>(game.m));
  const uint64_t total = uint64_t{1} << (2 * game.m);
  for (uint64_t code = 0; code < total; ++code) {
    for (int j = 0; j < game.m; ++j) {
      uint64_t pair = (code >> (2 * j)) & 3;
      strategies[static_cast<size_t>(j)] = {static_cast<int>(pair & 1),
                                            static_cast<int>(pair >> 1)};
    }
    if (replay(game, strategies)) return {true, strategies};
  }
  return {false, {}};
}

}  // namespace ecc
