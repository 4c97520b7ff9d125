#include "doctest.h"

#include "ecc/games.hpp"

using namespace ecc;

namespace {

GameSpec minterm_game(PromiseSet promise, const char* u) {
  return GameSpec::membership(std::move(promise),
                              explicit_promise({BitString::parse(u)}));
}

}  // namespace

TEST_CASE("even-class minterm game is impossible") {
  GameSpec game = minterm_game(parity_class(3, 0), "000");
  GameResult res = ccf_search(game);
  CHECK(!res.winnable);
}

TEST_CASE("two-party AND game is impossible") {
  std::vector<BitString> all;
  for (uint32_t v = 0; v < 4; ++v) all.push_back(BitString(2, v));
  GameSpec game = minterm_game(explicit_promise(all), "11");
  CHECK(!ccf_search(game).winnable);
}

TEST_CASE("mixed-parity game is winnable and the witness replays") {
  PromiseSet promise = mixed_union(explicit_promise({BitString::parse("000")}));
  GameSpec game = minterm_game(promise, "000");
  GameResult res = ccf_search(game);
  REQUIRE(res.winnable);
  REQUIRE(res.witness.size() == 3);
  CHECK(replay(game, res.witness));
  // One known solution: every party answers the complement of its bit.
  std::vector<LocalStrategy> flip(3, LocalStrategy{1, 0});
  CHECK(replay(game, flip));
}

TEST_CASE("search result is deterministic") {
  PromiseSet promise = mixed_union(explicit_promise({BitString::parse("000")}));
  GameSpec game = minterm_game(promise, "000");
  GameResult a = ccf_search(game);
  GameResult b = ccf_search(game);
  REQUIRE(a.winnable);
  CHECK(a.witness == b.witness);
}

TEST_CASE("every mixed-parity membership game is winnable") {
  for (int m = 3; m <= 4; ++m) {
    PromiseSet evens = parity_class(m, 0);
    for (uint32_t mask = 1; mask < (1u << evens.size()); mask += 3) {
      std::vector<BitString> chosen;
      for (size_t k = 0; k < evens.size(); ++k)
        if ((mask >> k) & 1) chosen.push_back(evens.members[k]);
      PromiseSet a = explicit_promise(chosen);
      GameSpec game = GameSpec::membership(mixed_union(a), a);
      GameResult res = ccf_search(game);
      CHECK(res.winnable);
      if (res.winnable) CHECK(replay(game, res.witness));
    }
  }
}

TEST_CASE("impossibility survives promise widening") {
  // Impossible on the even class stays impossible on the whole cube.
  std::vector<BitString> all;
  for (uint32_t v = 0; v < 8; ++v) all.push_back(BitString(3, v));
  GameSpec game = minterm_game(explicit_promise(all), "000");
  CHECK(!ccf_search(game).winnable);
}

TEST_CASE("target must cover the promise") {
  GameSpec game;
  game.m = 2;
  game.promise = parity_class(2, 0);
  game.target[BitString::parse("00")] = 1;
  CHECK_THROWS_AS(ccf_search(game), IncompleteAssignment);
}

TEST_CASE("width guardrail") {
  GameSpec game = GameSpec::membership(parity_class(13, 0),
                                       explicit_promise({BitString::zeros(13)}));
  CHECK_THROWS_AS(ccf_search(game), SearchTooLarge);
}
