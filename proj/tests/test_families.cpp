#include <doctest.h>

#include "test_support.hpp"
#include "wvg/families.hpp"

using namespace wvg;

TEST_CASE("prop1 instance at n = 11 satisfies every asserted bound") {
  auto r = prop1_instance(11);
  CHECK(r.instance.game.n() == 2663);
  CHECK(r.instance.game.quota_int() == 1452);
  CHECK(r.instance.relative_quota == Rat(1, 2));
  CHECK(r.instance.relative_weights[0] == Rat(1, 12));  // w_1 = 1/(n+1)
  REQUIRE(r.instance.bounds.size() == 4);
  for (const auto& b : r.instance.bounds) {
    CAPTURE(b.name);
    CHECK(b.asserted);
    CHECK(b.satisfied);
  }
  CHECK(vector_sum(r.bzi.values) == 1);
  CHECK(r.deviation.linf <= r.deviation.l1 / 2);
}

TEST_CASE("prop1 closed form matches the generic engine and brute force at n = 2") {
  auto r = prop1_instance(2);
  CHECK(r.instance.game.quota_int() == 12);
  CHECK(r.instance.game.n() == 17);
  for (const auto& b : r.instance.bounds) CHECK_FALSE(b.asserted);

  auto oracle = brute_force_indices(r.instance.game);
  CHECK(r.eta_big == oracle.swings.per_player[0]);
  CHECK(r.eta_small == oracle.swings.per_player[1]);
  CHECK(r.bzi.values == oracle.banzhaf.values);
}

TEST_CASE("prop1 closed form equals class DP for n <= 5") {
  for (long n = 2; n <= 5; ++n) {
    auto r = prop1_instance(n);
    auto eta = swing_counts(r.instance.game);
    CAPTURE(n);
    CHECK(r.eta_big == eta.per_class[0]);
    CHECK(r.eta_small == eta.per_class[1]);
  }
}

TEST_CASE("prop2 instance at n = 11 satisfies every asserted bound") {
  auto r = prop2_instance(11);
  CHECK(r.instance.game.n() == 2685);
  CHECK(r.instance.game.quota_int() == 4114);
  CHECK(r.instance.relative_quota == Rat(1, 2));
  CHECK(r.instance.relative_weights[0] == Rat(1, 34));  // w_1 = 1/(3n+1)
  REQUIRE(r.instance.bounds.size() == 3);
  for (const auto& b : r.instance.bounds) {
    CAPTURE(b.name);
    CHECK(b.asserted);
    CHECK(b.satisfied);
  }
  CHECK(vector_sum(r.bzi.values) == 1);
}

TEST_CASE("prop2 closed form equals class DP for n <= 4, brute force at n = 2") {
  for (long n = 2; n <= 4; ++n) {
    auto r = prop2_instance(n);
    auto eta = swing_counts(r.instance.game);
    CAPTURE(n);
    CHECK(r.eta_large == eta.per_class[0]);
    CHECK(r.eta_small == eta.per_class[1]);
  }
  auto r2 = prop2_instance(2);
  CHECK(r2.instance.game.quota_int() == 28);
  CHECK(r2.instance.game.n() == 21);
  auto oracle = brute_force_indices(r2.instance.game);
  CHECK(r2.eta_large == oracle.swings.per_player[0]);
  CHECK(r2.eta_small == oracle.swings.per_player[5]);
}

TEST_CASE("vnq at q = 1 is weight-unanimous with f = 1/3 exactly") {
  for (long n : {1L, 2L, 3L, 10L, 50L}) {
    auto r = vnq_instance(n, Rat(1));
    CAPTURE(n);
    CHECK(r.point.quota == 3 * n);
    CHECK(r.point.f == Rat(1, 3));
    for (const Rat& v : r.bzi.values) CHECK(v == make_rat(1, 2 * n));
  }
}

TEST_CASE("vnq at n = 2, q = 1/2 against subset enumeration") {
  auto r = vnq_instance(2, Rat(1, 2));
  CHECK(r.point.quota == 3);
  auto oracle = brute_force_indices(r.instance.game);
  CHECK(r.bzi.values == oracle.banzhaf.values);
  CHECK(r.bzi.values ==
        std::vector<Rat>{Rat(1, 3), Rat(1, 3), Rat(1, 6), Rat(1, 6)});
  CHECK(r.point.f == 0);  // BZI coincides with the weights here
}

TEST_CASE("vnq rejects bad parameters; q = 0 maps to quota 1") {
  CHECK_THROWS_AS(vnq_instance(0, Rat(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(vnq_instance(3, Rat(3, 2)), std::invalid_argument);
  auto r = vnq_instance(3, Rat(0));
  CHECK(r.point.quota == 1);
}

TEST_CASE("vnq f-values coincide under quota duality") {
  const long n = 7;
  for (long quota = 1; quota <= 3 * n; ++quota) {
    auto a = vnq_instance(n, make_rat(quota, 3 * n));
    auto b = vnq_instance(n, make_rat(3 * n + 1 - quota, 3 * n));
    CAPTURE(quota);
    CHECK(a.point.f == b.point.f);
  }
}

TEST_CASE("printed appendix swing sums vs the counting engine at n = 2, q = 1/2") {
  auto cmp = vnq_eta_printed(2, Rat(1, 2));
  CHECK(cmp.printed_quota == 3);
  CHECK(cmp.printed_eta_weight2 == 2);  // the printed sum evaluates to 2
  CHECK(cmp.dp_eta_weight2 == 4);       // enumeration gives 4
  // the discrepancy is documented, not "fixed": no equality is asserted

  auto tiny = vnq_eta_printed(1, Rat(1));
  CHECK(tiny.printed_quota == 3);
  CHECK(tiny.dp_eta_weight2 == 1);
  CHECK(tiny.dp_eta_weight1 == 1);
}

TEST_CASE("f curve: monotone on the upper half, dual-symmetric, exact endpoint") {
  std::vector<Rat> grid;
  for (long k = 10; k <= 20; ++k) grid.push_back(Rat(k, 20));
  auto report = f_curve(40, grid);
  CHECK(report.points.size() == 11);
  CHECK(report.nondecreasing_upper_half);
  CHECK(report.duality_ok);
  CHECK(report.points.back().point.f == Rat(1, 3));
  CHECK(report.points.back().cand_cubic == Rat(1, 3));
  CHECK(report.points.back().cand_entropy == Rat(1, 3));
  CHECK(report.max_abs_error_cubic <= Rat(1, 10));
  CHECK(report.max_abs_error_entropy <= Rat(1, 10));
}

TEST_CASE("f_n(1/2) decreases in n") {
  Rat prev(-1);
  for (long n : {10L, 20L, 40L}) {
    Rat f = vnq_instance(n, Rat(1, 2)).point.f;
    CAPTURE(n);
    if (prev >= 0) CHECK(f < prev);
    prev = f;
  }
}

TEST_CASE("analytic companions at the symmetric point and the endpoints") {
  const Rat tol = make_rat(Int(1), int_pow(Int(10), 9));
  auto half = analytic_curves(Rat(1, 2));
  CHECK(rat_abs(half.g - Rat(1, 2)) <= tol);
  CHECK(rat_abs(half.entropy - 1) <= tol);
  CHECK(half.cand_cubic == 0);
  CHECK(rat_abs(half.cand_entropy) <= tol);
  CHECK(half.q_le_g);

  auto one = analytic_curves(Rat(1));
  CHECK(one.cand_cubic == Rat(1, 3));
  CHECK(one.cand_entropy == Rat(1, 3));  // exact: H(1) = 0
  CHECK(rat_abs(one.g - 1) <= tol);

  auto zero = analytic_curves(Rat(0));
  CHECK(rat_abs(zero.g) <= tol);
  CHECK(zero.cand_entropy == Rat(1, 3));

  CHECK_THROWS_AS(analytic_curves(Rat(-1, 10)), std::invalid_argument);
}

TEST_CASE("g brackets and symmetry on a grid") {
  // q <= g(q) <= 1.07 q on [1/2, 1]; g(1-q) ~ 1 - g(q)
  for (long k = 0; k <= 100; ++k) {
    Rat q = Rat(1, 2) + make_rat(k, 200);
    auto c = analytic_curves(q);
    CAPTURE(k);
    CHECK(c.q_le_g);
    CHECK(c.g_le_107q);
    auto mirror = analytic_curves(1 - q);
    CHECK(rat_abs((1 - mirror.g) - c.g) <= make_rat(Int(1), int_pow(Int(10), 9)));
  }
  // radicand stays nonnegative across [0,1]
  for (long k = 0; k <= 1000; ++k) CHECK_NOTHROW(analytic_curves(make_rat(k, 1000)));
}

TEST_CASE("argmax of the swing summand tracks n*g(q), not n*q") {
  auto sym = argmax_summand(500, Rat(1, 2));
  CHECK(rat_abs(Rat(sym.i_star) - 250) <= 5);
  CHECK(sym.relative_gap <= Rat(1, 50));

  auto skew = argmax_summand(500, Rat(4, 5));
  CHECK(skew.i_star != 400);  // the naive guess i ~ q*n is wrong
  CHECK(skew.relative_gap <= Rat(1, 25));

  auto seventy = argmax_summand(500, Rat(7, 10));
  CHECK(seventy.relative_gap <= Rat(1, 25));
}

TEST_CASE("random games are deterministic in the seed") {
  auto a = random_game(4, Rat(1, 2), 42, UniformIntDist{9});
  auto b = random_game(4, Rat(1, 2), 42, UniformIntDist{9});
  CHECK(a.quota_int() == b.quota_int());
  REQUIRE(a.classes().size() == b.classes().size());
  for (std::size_t c = 0; c < a.classes().size(); ++c) {
    CHECK(a.classes()[c].weight == b.classes()[c].weight);
    CHECK(a.classes()[c].count == b.classes()[c].count);
  }
  auto other = random_game(4, Rat(1, 2), 43, UniformIntDist{9});
  bool same = a.quota_int() == other.quota_int();
  for (std::size_t c = 0; same && c < std::min(a.classes().size(), other.classes().size()); ++c)
    same = a.classes()[c].weight == other.classes()[c].weight;
  CHECK_FALSE(same);

  CHECK_THROWS_AS(random_game(0, Rat(1, 2), 1, UniformIntDist{}), std::invalid_argument);
  CHECK_THROWS_AS(random_game(3, Rat(0), 1, UniformIntDist{}), std::invalid_argument);
}

TEST_CASE("two-class construction mirrors the prop2 shape at n = 2") {
  auto g = two_class_game(TwoClassDist{5, 8, 16}, Rat(1, 2));
  auto p2 = prop2_instance(2).instance.game;
  CHECK(g.quota_int() == p2.quota_int());
  CHECK(g.classes()[0].weight == p2.classes()[0].weight);
  CHECK(g.classes()[0].count == p2.classes()[0].count);
  CHECK(g.classes()[1].count == p2.classes()[1].count);
}

TEST_CASE("BZI conjecture scan reports ratios without asserting") {
  // the four-shareholder game: r = (7/15) / (0.42 * 14/3) = 5/21
  auto game = WeightedGame::make(
      Rat(1, 2), {{Rat(21, 50), 1}, {Rat(2, 5), 1}, {Rat(9, 100), 2}});
  auto w = game.relative_weights();
  Rat r = l1_distance(banzhaf(game).values, w);
  auto stats = weight_stats(w);
  CHECK(r / (stats.delta * stats.lambda) == Rat(5, 21));

  BziScanConfig config;
  config.samples = 30;
  config.n_max = 8;
  config.seed = 7;
  config.family_n = 4;
  auto report = conjecture_bzi_scan(config);
  CHECK(report.samples.size() == 33);  // 30 samples + three families
  CHECK(report.max_ratio > 0);
  REQUIRE(report.argmax_game.has_value());
  CHECK(report.samples[report.argmax].ratio == report.max_ratio);

  auto again = conjecture_bzi_scan(config);
  REQUIRE(again.samples.size() == report.samples.size());
  for (std::size_t i = 0; i < report.samples.size(); ++i) {
    CHECK(again.samples[i].ratio == report.samples[i].ratio);
    CHECK(again.samples[i].label == report.samples[i].label);
  }
}

TEST_CASE("SSI conjecture scan finds no violation on a seeded suite") {
  SsiScanConfig config;
  config.samples = 25;
  config.n_max = 8;
  config.seed = 11;
  config.family_n = 4;
  auto report = conjecture_ssi_scan(config);
  CHECK(report.violations == 0);
  CHECK(report.config.q_grid.size() == 9);
  CHECK(report.samples.size() == 25 + 2 + 9);  // samples + prop1/prop2 + vnq grid
  for (const auto& s : report.samples) {
    CAPTURE(s.label);
    CHECK_FALSE(s.violated);
    CHECK(s.ratio <= 1);
  }
}
