#include <doctest.h>

#include "wvg/counting.hpp"
#include "wvg/game.hpp"

using namespace wvg;

TEST_CASE("construction rescales to integers") {
  auto g = WeightedGame::make(
      Rat(1, 2), {{Rat(21, 50), 1}, {Rat(2, 5), 1}, {Rat(9, 100), 2}});
  CHECK(g.n() == 4);
  CHECK(g.quota_int() == 50);
  CHECK(g.total_weight() == 100);
  REQUIRE(g.classes().size() == 3);
  CHECK(g.classes()[0].weight == 42);
  CHECK(g.classes()[1].weight == 40);
  CHECK(g.classes()[2].weight == 9);
  CHECK(g.classes()[2].count == 2);
  CHECK(g.relative_quota() == Rat(1, 2));
}

TEST_CASE("prop1 shape at n = 11 integerizes to [1452; 242, 1 x 2662]") {
  auto g = WeightedGame::make(Rat(1452), {{Rat(242), 1}, {Rat(1), 2662}});
  CHECK(g.n() == 2663);
  CHECK(g.quota_int() == 1452);
  CHECK(g.total_weight() == 2904);
  CHECK(g.relative_weights()[0] == Rat(1, 12));
}

TEST_CASE("non-integer scaled quota rounds up") {
  // quota 5/2 over integer weights: winning needs weight >= 3
  auto g = WeightedGame::make(Rat(5, 2), {{Rat(1), 5}});
  CHECK(g.quota_int() == 3);
  CHECK(g.quota_scaled() == Rat(5, 2));
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(WeightedGame::make(Rat(0), {{Rat(1), 3}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGame::make(Rat(-1), {{Rat(1), 3}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGame::make(Rat(4), {{Rat(1), 3}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGame::make(Rat(1), {{Rat(-1), 3}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGame::make(Rat(1), {{Rat(1), 0}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGame::make(Rat(1), {}), std::invalid_argument);
}

TEST_CASE("winning test") {
  auto g = WeightedGame::make(
      Rat(1, 2), {{Rat(21, 50), 1}, {Rat(2, 5), 1}, {Rat(9, 100), 2}});
  std::vector<long> rest{1, 2, 3};
  CHECK(g.is_winning(rest));  // shareholders 2,3,4 can enforce a proposal
  CHECK_FALSE(g.is_winning(std::vector<long>{}));
  std::vector<long> all{0, 1, 2, 3};
  CHECK(g.is_winning(all));
  std::vector<long> pair{0, 3};
  CHECK(g.is_winning(pair));
  std::vector<long> two_three{2, 3};
  CHECK_FALSE(g.is_winning(two_three));
  std::vector<long> bad{0, 7};
  CHECK_THROWS_AS(g.is_winning(bad), std::invalid_argument);
  std::vector<long> dup{1, 1};
  CHECK_THROWS_AS(g.is_winning(dup), std::invalid_argument);
}

TEST_CASE("player order is class-major") {
  auto g = WeightedGame::make(Rat(3), {{Rat(2), 2}, {Rat(1), 3}});
  CHECK(g.player_class(0) == 0);
  CHECK(g.player_class(1) == 0);
  CHECK(g.player_class(2) == 1);
  CHECK(g.player_class(4) == 1);
  CHECK(g.player_weight(1) == 2);
  CHECK(g.player_weight(2) == 1);
  CHECK_THROWS_AS(g.player_class(5), std::invalid_argument);
}

TEST_CASE("dual game follows quota w(N)-Q+1") {
  auto g = WeightedGame::make(Rat(3), {{Rat(2), 1}, {Rat(1), 3}});
  auto d = dual_game(g);
  CHECK(d.quota_int() == 3);  // 5 - 3 + 1: this game is self-dual
  CHECK(dual_game(d).quota_int() == g.quota_int());

  auto majority = WeightedGame::make(Rat(2), {{Rat(1), 3}});
  CHECK(dual_game(majority).quota_int() == 2);  // fixed point

  auto unanimity = WeightedGame::make(Rat(5), {{Rat(1), 5}});
  CHECK(dual_game(unanimity).quota_int() == 1);
}

TEST_CASE("swing counts are invariant under duality") {
  auto g = WeightedGame::make(Rat(3), {{Rat(2), 1}, {Rat(1), 3}});
  auto d = dual_game(g);
  CHECK(brute_force_indices(g).swings.per_player ==
        brute_force_indices(d).swings.per_player);

  auto unanimity = WeightedGame::make(Rat(4), {{Rat(1), 4}});
  auto dual_u = dual_game(unanimity);
  auto eu = brute_force_indices(unanimity).swings;
  auto ed = brute_force_indices(dual_u).swings;
  CHECK(eu.per_player == ed.per_player);
  for (const Int& e : eu.per_player) CHECK(e == 1);
}
