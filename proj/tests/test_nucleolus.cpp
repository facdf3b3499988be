#include <doctest.h>

#include "test_support.hpp"
#include "wvg/families.hpp"
#include "wvg/nucleolus.hpp"

using namespace wvg;

namespace {

WeightedGame company_game() {
  return WeightedGame::make(
      Rat(1, 2), {{Rat(21, 50), 1}, {Rat(2, 5), 1}, {Rat(9, 100), 2}});
}

PowerVector imputation(std::vector<Rat> values) {
  return {std::move(values), IndexKind::raw_weights};
}

// seeded random imputation: nonnegative rationals summing to 1
PowerVector random_imputation(std::mt19937_64& rng, std::size_t n) {
  return imputation(wvgtest::random_nonneg_normalized(rng, n, 30));
}

}  // namespace

TEST_CASE("excess vector on worked examples") {
  auto dict = WeightedGame::make(Rat(1), {{Rat(1), 1}, {Rat(0), 2}});
  auto ev = excess_vector(dict, imputation({Rat(1), Rat(0), Rat(0)}));
  CHECK(ev.sorted.size() == 6);
  CHECK(ev.sorted.front() == 0);  // no coalition gains

  auto company = excess_vector(company_game(),
                               imputation({Rat(2, 5), Rat(1, 5), Rat(1, 5), Rat(1, 5)}));
  CHECK(company.sorted.size() == 14);
  CHECK(company.sorted.front() == Rat(2, 5));  // e.g. {1,3}: 1 - 3/5

  auto majority = WeightedGame::make(Rat(2), {{Rat(1), 3}});
  auto me = excess_vector(majority, imputation({Rat(1, 3), Rat(1, 3), Rat(1, 3)}));
  CHECK(me.sorted.front() == Rat(1, 3));
}

TEST_CASE("excess vector validates input") {
  auto majority = WeightedGame::make(Rat(2), {{Rat(1), 3}});
  CHECK_THROWS_AS(excess_vector(majority, imputation({Rat(1), Rat(1), Rat(1)})),
                  std::invalid_argument);
  auto big = WeightedGame::make(Rat(7), {{Rat(1), 13}});
  CHECK_THROWS_AS(
      excess_vector(big, imputation(std::vector<Rat>(13, Rat(1, 13)))),
      cap_error);
}

TEST_CASE("lexicographic comparison") {
  ExcessVector a{{Rat(1, 2), Rat(0)}};
  ExcessVector b{{Rat(1, 3), Rat(1, 3)}};
  CHECK(lex_compare(a, a) == std::strong_ordering::equal);
  CHECK(lex_compare(a, b) == std::strong_ordering::greater);
  CHECK(lex_compare(b, a) == std::strong_ordering::less);
  ExcessVector short_one{{Rat(1)}};
  CHECK_THROWS_AS(lex_compare(a, short_one), std::invalid_argument);

  // the paper's nucleolus beats the uniform imputation on the company game
  auto g = company_game();
  auto at_nucleolus =
      excess_vector(g, imputation({Rat(2, 5), Rat(1, 5), Rat(1, 5), Rat(1, 5)}));
  auto at_uniform =
      excess_vector(g, imputation({Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)}));
  CHECK(lex_compare(at_nucleolus, at_uniform) == std::strong_ordering::less);
}

TEST_CASE("nucleolus of the four-shareholder game") {
  auto nuc = nucleolus(company_game());
  CHECK(nuc.values ==
        std::vector<Rat>{Rat(2, 5), Rat(1, 5), Rat(1, 5), Rat(1, 5)});
  CHECK(nuc.kind == IndexKind::nucleolus);
}

TEST_CASE("nucleolus on symmetric and degenerate games") {
  auto dict = nucleolus(WeightedGame::make(Rat(1), {{Rat(1), 1}, {Rat(0), 2}}));
  CHECK(dict.values == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});

  auto majority = nucleolus(WeightedGame::make(Rat(2), {{Rat(1), 3}}));
  CHECK(majority.values == std::vector<Rat>{Rat(1, 3), Rat(1, 3), Rat(1, 3)});

  auto small = nucleolus(WeightedGame::make(Rat(3), {{Rat(2), 1}, {Rat(1), 3}}));
  CHECK(small.values ==
        std::vector<Rat>{Rat(2, 5), Rat(1, 5), Rat(1, 5), Rat(1, 5)});

  auto unanimity = nucleolus(WeightedGame::make(Rat(4), {{Rat(1), 4}}));
  CHECK(unanimity.values == std::vector<Rat>(4, Rat(1, 4)));

  auto solo = nucleolus(WeightedGame::make(Rat(1), {{Rat(1), 1}}));
  CHECK(solo.values == std::vector<Rat>{Rat(1)});

  auto big = WeightedGame::make(Rat(7), {{Rat(1), 13}});
  CHECK_THROWS_AS(nucleolus(big), cap_error);
}

TEST_CASE("two winning singletons: floors dropped, symmetry kept") {
  // both players alone reach the quota; the pair is interchangeable in v
  auto g = WeightedGame::make(Rat(3, 10), {{Rat(3, 5), 1}, {Rat(2, 5), 1}});
  auto nuc = nucleolus(g);
  CHECK(nuc.values == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
}

TEST_CASE("no random imputation lex-beats the nucleolus") {
  std::mt19937_64 rng(271828);
  std::vector<WeightedGame> games;
  games.push_back(company_game());
  games.push_back(WeightedGame::make(Rat(5), {{Rat(3), 1}, {Rat(2), 2}, {Rat(1), 2}}));
  games.push_back(WeightedGame::make(Rat(4), {{Rat(2), 2}, {Rat(1), 3}}));
  for (const auto& g : games) {
    auto nuc = nucleolus(g);
    auto theta_nuc = excess_vector(g, nuc);
    for (int iter = 0; iter < 200; ++iter) {
      auto y = random_imputation(rng, static_cast<std::size_t>(g.n()));
      CAPTURE(iter);
      CHECK(lex_compare(theta_nuc, excess_vector(g, y)) != std::strong_ordering::greater);
    }
  }
}

TEST_CASE("nucleolus symmetry and dummies on random games") {
  std::mt19937_64 rng(5150);
  for (int iter = 0; iter < 25; ++iter) {
    long n = wvgtest::draw(rng, 2, 7);
    std::vector<RatClass> classes;
    long total = 0;
    for (long i = 0; i < n; ++i) {
      long w = wvgtest::draw(rng, 0, 9);
      classes.push_back({Rat(w), 1});
      total += w;
    }
    if (total == 0) continue;
    long quota = wvgtest::draw(rng, 1, total);
    auto g = WeightedGame::make(Rat(quota), classes);
    auto nuc = nucleolus(g);
    CAPTURE(iter);
    CHECK(vector_sum(nuc.values) == 1);
    for (long i = 0; i < n; ++i) {
      if (g.player_weight(i) == 0)
        CHECK(nuc.values[static_cast<std::size_t>(i)] == 0);
      for (long j = 0; j < n; ++j)
        if (g.player_weight(i) == g.player_weight(j))
          CHECK(nuc.values[static_cast<std::size_t>(i)] ==
                nuc.values[static_cast<std::size_t>(j)]);
    }
  }
}

TEST_CASE("nucleolus stays within the Theorem-2 style bound on a spot sample") {
  std::mt19937_64 rng(8888);
  for (int iter = 0; iter < 20; ++iter) {
    long n = wvgtest::draw(rng, 2, 8);
    long den = wvgtest::draw(rng, 2, 20);
    Rat q = make_rat(wvgtest::draw(rng, 1, den - 1), den);
    auto g = random_game(n, q, derive_seed(20260809, static_cast<unsigned long long>(iter)),
                         UniformIntDist{20});
    auto w = g.relative_weights();
    Rat lhs = l1_distance(nucleolus(g).values, w);
    Rat delta = weight_stats(w).delta;
    Rat complement = 1 - q;
    Rat bound = 2 * delta / std::min(q, complement);
    CAPTURE(iter);
    CHECK(lhs <= bound);
  }
}
