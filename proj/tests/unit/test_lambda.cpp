#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "modbetti/lambda/lambda.hpp"

using namespace modbetti;
using namespace testing_helpers;

namespace {

const RatFunc v = RatFunc::v_power(1);

Series<RatFunc> x_times(const RatFunc& c, std::size_t order) { return Series<RatFunc>::monomial(c, 1, order); }

Series<RatFunc> random_series(std::mt19937& rng, std::size_t order, bool unit) {
  std::vector<RatFunc> c{unit ? RatFunc(1) : RatFunc()};
  for (std::size_t k = 1; k <= order; ++k) c.push_back(random_ratfunc(rng));
  return Series<RatFunc>(c);
}

void expect_series_eq(const Series<RatFunc>& a, const Series<RatFunc>& b) {
  ASSERT_EQ(a.order(), b.order());
  for (std::size_t k = 0; k <= a.order(); ++k) EXPECT_EQ(a[k], b[k]) << "coefficient " << k;
}

}  // namespace

TEST(Moebius, ClassicalValues) {
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(moebius(4), 0);
  EXPECT_EQ(moebius(6), 1);
  EXPECT_EQ(moebius(7), -1);
  EXPECT_EQ(moebius(30), -1);
  EXPECT_THROW(moebius(0), InvalidArgument);
}

TEST(Adams, Examples) {
  auto s = adams(x_times(v, 2), 2);
  EXPECT_EQ(s[2], RatFunc::v_power(2));
  EXPECT_TRUE(s[1].is_zero());
  auto t = adams(series_of<Rat>({1, 1, 0, 0}), 3);
  EXPECT_EQ(t.coefficients(), (std::vector<Rat>{1, 0, 0, 1}));
  auto x = series_of<Rat>({0, 1, 0, 0, 0});
  EXPECT_EQ(adams(adams(x, 2), 2).coefficients(), adams(x, 4).coefficients());
  EXPECT_EQ(adams(x, 4)[4], Rat(1));
}

TEST(Exp, Examples) {
  EXPECT_EQ(plethystic_exp(series_of<Rat>({0, 1, 0, 0})).coefficients(), (std::vector<Rat>{1, 1, 1, 1}));
  auto e = plethystic_exp(x_times(v, 2));
  EXPECT_EQ(e[1], v);
  EXPECT_EQ(e[2], RatFunc::v_power(2));
  auto h = plethystic_exp(x_times(RatFunc::inverse_one_minus_power(1), 2));
  EXPECT_EQ(h[2], RatFunc::from_parts(PolyQ(1), {{1, 1}, {2, 1}}));
  EXPECT_THROW(plethystic_exp(series_of<Rat>({1, 1})), InvalidArgument);
}

TEST(Log, Examples) {
  EXPECT_EQ(plethystic_log(series_of<Rat>({1, 1, 1, 1, 1})).coefficients(), (std::vector<Rat>{0, 1, 0, 0, 0}));
  // 1/(1 - v x)
  std::vector<RatFunc> geo;
  for (long k = 0; k <= 4; ++k) geo.push_back(RatFunc::v_power(k));
  auto l = plethystic_log(Series<RatFunc>(geo));
  expect_series_eq(l, x_times(v, 4));
  // 1/(1-x) * 1/(1-vx)
  auto both = plethystic_log(Series<RatFunc>(geo) * series_inv(Series<RatFunc>({RatFunc(1), RatFunc(-1), RatFunc(), RatFunc(), RatFunc()})));
  expect_series_eq(both, x_times(v + RatFunc(1), 4));
  EXPECT_THROW(plethystic_log(series_of<Rat>({2, 1})), InvalidArgument);
}

TEST(GkSequence, Examples) {
  auto a = gk_sequence(Rat(5), 4);
  EXPECT_EQ(a, (std::vector<Rat>{5, 0, 0, 0}));
  auto g = gk_sequence(v, 3);
  EXPECT_EQ(g[0], v);
  EXPECT_EQ(g[1], (RatFunc::v_power(2) - v) * make_rat(1, 2));
  EXPECT_EQ(g[2], (RatFunc::v_power(3) - v) * make_rat(1, 3));
  for (const auto& z : gk_sequence(RatFunc(), 3)) EXPECT_TRUE(z.is_zero());
}

TEST(Pow, Examples) {
  auto f = series_of<Rat>({1, 1, 0, 0});
  EXPECT_EQ(plethystic_pow(f, Rat(1)).coefficients(), f.coefficients());
  EXPECT_EQ(plethystic_pow(f, Rat(2)).coefficients(), (std::vector<Rat>{1, 2, 1, 0}));
  auto p = plethystic_pow(Series<RatFunc>({RatFunc(1), RatFunc(1)}), v);
  EXPECT_EQ(p[1], v);
}

TEST(LambdaProperties, ExpAdditive) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_series(rng, 6, false), g = random_series(rng, 6, false);
    expect_series_eq(plethystic_exp(f + g), plethystic_exp(f) * plethystic_exp(g));
  }
}

TEST(LambdaProperties, LogExpInverse) {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_series(rng, 6, false);
    expect_series_eq(plethystic_log(plethystic_exp(f)), f);
    auto u = random_series(rng, 6, true);
    expect_series_eq(plethystic_exp(plethystic_log(u)), u);
  }
}

TEST(LambdaProperties, Heine) {
  expect_series_eq(plethystic_exp(x_times(RatFunc::inverse_one_minus_power(1), 10)), heine_series(10));
}

TEST(LambdaProperties, PowTwoPaths) {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 3; ++trial) {
    auto f = random_series(rng, 8, true);
    const RatFunc g = random_ratfunc(rng), h = random_ratfunc(rng);
    expect_series_eq(plethystic_pow(f, g), plethystic_pow_product(f, g));
    expect_series_eq(plethystic_pow(f, g + h), plethystic_pow(f, g) * plethystic_pow(f, h));
  }
}

TEST(LambdaProperties, AdamsComposition) {
  std::mt19937 rng(34);
  auto f = random_series(rng, 12, false);
  for (unsigned m : {2u, 3u})
    for (unsigned k : {1u, 2u, 3u}) expect_series_eq(adams(adams(f, m), k), adams(f, m * k));
}
