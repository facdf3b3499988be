#include <doctest.h>

#include "test_support.hpp"
#include "wvg/lemmas.hpp"

using namespace wvg;

namespace {
WeightVector company_shares() {
  return {Rat(21, 50), Rat(2, 5), Rat(9, 100), Rat(9, 100)};
}
PowerVector company_bzi() {
  return {{Rat(1, 2), Rat(1, 6), Rat(1, 6), Rat(1, 6)}, IndexKind::banzhaf};
}
}  // namespace

TEST_CASE("ratio bounds with x == w") {
  PowerVector x{{Rat(1, 2), Rat(1, 4), Rat(1, 4)}, IndexKind::raw_weights};
  auto r = ratio_bounds(x, x.values);
  CHECK(r.epsilon == 0);
  CHECK(r.all_ok());
  for (const auto& c : r.classes) CHECK(c.ratio == 1);
}

TEST_CASE("ratio bounds on the four-shareholder example") {
  auto r = ratio_bounds(company_bzi(), company_shares());
  CHECK(r.epsilon == Rat(7, 15));
  REQUIRE(r.classes.size() == 3);
  CHECK(r.classes[0].alpha == Rat(21, 50));
  CHECK(r.classes[0].ratio == Rat(25, 21));
  CHECK(r.classes[1].alpha == Rat(2, 5));
  CHECK(r.classes[1].ratio == Rat(1, 6) / Rat(2, 5));
  CHECK(r.classes[2].alpha == Rat(9, 50));
  CHECK(r.classes[2].members == 2);
  CHECK(r.all_ok());
}

TEST_CASE("ratio bounds rejects asymmetric power vectors") {
  PowerVector x{{Rat(3, 10), Rat(3, 10), Rat(1, 5), Rat(1, 5)}, IndexKind::raw_weights};
  WeightVector uniform{Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)};
  CHECK_THROWS_AS(ratio_bounds(x, uniform), std::invalid_argument);
}

TEST_CASE("ratio bounds hold whenever the symmetry hypothesis does") {
  std::mt19937_64 rng(4242);
  for (int iter = 0; iter < 300; ++iter) {
    // few distinct weight values, power constant per class
    long distinct = 1 + iter % 4;
    std::vector<long> wvals(static_cast<std::size_t>(distinct));
    for (auto& v : wvals) v = wvgtest::draw(rng, 0, 9);
    std::vector<long> sizes(static_cast<std::size_t>(distinct));
    for (auto& s : sizes) s = wvgtest::draw(rng, 1, 3);
    std::vector<long> xvals(static_cast<std::size_t>(distinct));
    long wt = 0, xt = 0;
    for (long c = 0; c < distinct; ++c) {
      xvals[c] = wvgtest::draw(rng, 0, 9);
      wt += wvals[c] * sizes[c];
      xt += xvals[c] * sizes[c];
    }
    if (wt == 0 || xt == 0) continue;
    WeightVector w;
    PowerVector x;
    for (long c = 0; c < distinct; ++c) {
      for (long i = 0; i < sizes[c]; ++i) {
        w.push_back(make_rat(wvals[c], wt));
        x.values.push_back(make_rat(xvals[c], xt));
      }
    }
    // distinct-value map may merge classes; symmetry still holds by value
    bool symmetric = true;
    for (std::size_t i = 0; i < w.size() && symmetric; ++i)
      for (std::size_t j = 0; j < w.size(); ++j)
        if (w[i] == w[j] && x.values[i] != x.values[j]) {
          symmetric = false;
          break;
        }
    if (!symmetric) continue;
    CAPTURE(iter);
    CHECK(ratio_bounds(x, w).all_ok());
  }
}

TEST_CASE("combined ratio bounds") {
  auto zero = combine_ratio_bounds(Rat(0), Rat(0));
  CHECK(zero.lower == 1);
  CHECK(zero.upper == 1);
  CHECK(zero.additive == 0);

  auto tenth = combine_ratio_bounds(Rat(1, 10), Rat(1, 10));
  CHECK(tenth.lower == Rat(9, 11));
  CHECK(tenth.upper == Rat(11, 9));
  CHECK(tenth.additive == Rat(1, 5));

  auto half = combine_ratio_bounds(Rat(1, 2), Rat(0));
  CHECK(half.lower == Rat(1, 2));
  CHECK(half.upper == Rat(3, 2));
  CHECK(half.additive == Rat(1, 2));

  CHECK_THROWS_AS(combine_ratio_bounds(Rat(1), Rat(0)), std::domain_error);
  CHECK_THROWS_AS(combine_ratio_bounds(Rat(0), Rat(3, 2)), std::domain_error);
}

TEST_CASE("combined interval contains the actual quotient") {
  std::mt19937_64 rng(515);
  for (int iter = 0; iter < 300; ++iter) {
    Rat wi = make_rat(wvgtest::draw(rng, 1, 30), 10);
    Rat wj = make_rat(wvgtest::draw(rng, 1, 30), 10);
    Rat eps_i = make_rat(wvgtest::draw(rng, 0, 9), 10);
    Rat eps_j = make_rat(wvgtest::draw(rng, 0, 9), 10);
    // x within the allowed relative deviation, nonzero
    Rat xi = wi * (1 + eps_i * make_rat(wvgtest::draw(rng, -10, 10), 10));
    Rat xj = wj * (1 + eps_j * make_rat(wvgtest::draw(rng, -10, 10), 10));
    if (xi == 0 || xj == 0) continue;
    auto b = combine_ratio_bounds(eps_i, eps_j);
    // the interval brackets (x_i/w_i)/(x_j/w_j)
    Rat quotient = (xi / wi) / (xj / wj);
    CHECK(b.lower <= quotient);
    CHECK(quotient <= b.upper);
    CHECK(rat_abs(xi / wi - xj / wj) <= b.additive);
  }
}

TEST_CASE("L1 from relative deviations: worked cases") {
  WeightVector w{Rat(1, 2), Rat(1, 2)};
  std::vector<Rat> x{Rat(11, 20), Rat(9, 20)};
  auto r = l1_from_relative(x, w, {0, 1}, Rat(0), Rat(0), Rat(1, 10));
  CHECK(r.l1 == Rat(1, 10));
  CHECK(r.bound == Rat(1, 10));
  CHECK(r.ok);

  auto same = l1_from_relative(w, w, {0, 1}, Rat(0), Rat(0), Rat(0));
  CHECK(same.l1 == 0);
  CHECK(same.ok);

  // empty S with unit mass bounds: trivially true since ||x-w||_1 <= 2
  auto empty = l1_from_relative(x, w, {}, Rat(1), Rat(1), Rat(0));
  CHECK(empty.bound == 2);
  CHECK(empty.ok);
}

TEST_CASE("L1 from relative deviations: hypothesis violations are named") {
  WeightVector w{Rat(1, 2), Rat(1, 2)};
  std::vector<Rat> x{Rat(1), Rat(0)};
  CHECK_THROWS_WITH_AS(
      l1_from_relative(x, {Rat(2), Rat(1)}, {}, Rat(3), Rat(1), Rat(0)),
      "hypothesis violated: w(N) > 1", std::invalid_argument);
  CHECK_THROWS_WITH_AS(l1_from_relative(x, w, {}, Rat(1, 4), Rat(1), Rat(0)),
                       "hypothesis violated: w(N\\S) > eps_hat", std::invalid_argument);
  CHECK_THROWS_WITH_AS(l1_from_relative(x, w, {}, Rat(1), Rat(1, 2), Rat(0)),
                       "hypothesis violated: x(N\\S) > eps_tilde", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      l1_from_relative(x, w, {0, 1}, Rat(0), Rat(0), Rat(1, 10)),
      "hypothesis violated: x_i/w_i outside [1-eps, 1+eps] on S",
      std::invalid_argument);
}

TEST_CASE("L1 bound holds under the lemma hypotheses") {
  std::mt19937_64 rng(616);
  for (int iter = 0; iter < 300; ++iter) {
    std::size_t n = 2 + iter % 7;
    auto w = wvgtest::random_normalized(rng, n);
    std::vector<std::size_t> subset;
    std::vector<Rat> x(n);
    Rat eps = make_rat(wvgtest::draw(rng, 0, 9), 10);
    Rat x_off(0), w_off(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (wvgtest::draw(rng, 0, 3) > 0) {
        subset.push_back(i);
        x[i] = w[i] * (1 + eps * make_rat(wvgtest::draw(rng, -10, 10), 10));
      } else {
        x[i] = make_rat(wvgtest::draw(rng, 0, 20), 100);
        x_off += x[i];
        w_off += w[i];
      }
    }
    auto r = l1_from_relative(x, w, subset, w_off, x_off, eps);
    CAPTURE(iter);
    CHECK(r.ok);
  }
}

TEST_CASE("deviation report bundles norms with class ratios") {
  auto dev = deviation_report(company_bzi(), company_shares());
  CHECK(dev.l1 == Rat(7, 15));
  CHECK(dev.linf == rat_abs(Rat(1, 6) - Rat(2, 5)));
  CHECK(dev.symmetric);
  CHECK(dev.classes.size() == 3);
  CHECK(dev.linf <= dev.l1 / 2);
}
