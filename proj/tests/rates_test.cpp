#include <cmath>
#include <vector>

#include <doctest.h>

#include "netgrowth/rates.hpp"
#include "netgrowth/rng.hpp"

using namespace netgrowth;

TEST_SUITE_BEGIN("rates");

TEST_CASE("linear accumulation") {
    CHECK(accumulate_linear(100, RatePerDecade(0.10), 1) == doctest::Approx(110));
    CHECK(accumulate_linear(100, RatePerDecade(0.0), 5) == doctest::Approx(100));
    // (1 + 0.03453 * 83.9) * 34020, evaluated exactly in decimal: 132578.21934
    CHECK(accumulate_linear(34020, RatePerDecade(0.03453), 83.9) ==
          doctest::Approx(132578.21934).epsilon(1e-9));
    CHECK_THROWS_AS(accumulate_linear(0, RatePerDecade(0.1), 1), NonPositiveCount);
    CHECK_THROWS_AS(accumulate_linear(-5, RatePerDecade(0.1), 1), NonPositiveCount);
    CHECK_THROWS_AS(accumulate_linear(5, RatePerDecade(0.1), -1), DegenerateInput);
}

TEST_CASE("exponential accumulation") {
    CHECK(accumulate_exponential(1, RatePerDecade(0.0341), 0) == doctest::Approx(1));
    // Old English word stock grown forward 83.9 decades at the lexical rate
    // lands on the 1989 dictionary count.
    CHECK(accumulate_exponential(34020, RatePerDecade(0.03453), 83.9,
                                 Compounding::continuous) ==
          doctest::Approx(616500).epsilon(1500.0 / 616500));
    CHECK(accumulate_exponential(100, RatePerDecade(1.0), 3, Compounding::discrete) ==
          doctest::Approx(800));
    CHECK_THROWS_AS(accumulate_exponential(0, RatePerDecade(0.1), 1), NonPositiveCount);
}

TEST_CASE("rate estimation from two counts") {
    const RatePerDecade r1 =
        estimate_rate(GrowthPair(YearCE(1150), 34020, YearCE(1989), 616500));
    CHECK(r1.per_decade == doctest::Approx(0.03453).epsilon(0.00001 / 0.03453));
    const RatePerDecade r2 =
        estimate_rate(GrowthPair(YearCE(1657), 200000, YearCE(1989), 616500));
    CHECK(r2.per_decade == doctest::Approx(0.03391).epsilon(0.00001 / 0.03391));
    CHECK(estimate_rate(GrowthPair(YearCE(1900), 5000, YearCE(1950), 5000)).per_decade ==
          doctest::Approx(0.0));
}

TEST_CASE("growth pair invariants") {
    CHECK_THROWS_AS(GrowthPair(YearCE(1989), 1, YearCE(1150), 2), TimeOrder);
    CHECK_THROWS_AS(GrowthPair(YearCE(1150), 1, YearCE(1150), 2), TimeOrder);
    CHECK_THROWS_AS(GrowthPair(YearCE(1150), 0, YearCE(1989), 2), NonPositiveCount);
    CHECK_THROWS_AS(GrowthPair(YearCE(1150), 1, YearCE(1989), -2), NonPositiveCount);
}

TEST_CASE("b.c.e. years negate and subtract plainly") {
    CHECK(years_between(YearCE(-1750), YearCE(1992)) == doctest::Approx(3742));
    CHECK(decades_between(YearCE(-1750), YearCE(1992)) == doctest::Approx(374.2));
}

TEST_CASE("rate from a bare ratio") {
    CHECK(rate_from_ratio(41.5 / 0.000119, 3742).per_decade ==
          doctest::Approx(0.0341).epsilon(0.0001 / 0.0341));
    CHECK(rate_from_ratio(1.0, 500).per_decade == doctest::Approx(0.0));
    CHECK(rate_from_ratio(std::exp(10.0), 100).per_decade ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(rate_from_ratio(0.0, 100), NonPositiveCount);
    CHECK_THROWS_AS(rate_from_ratio(-2.0, 100), NonPositiveCount);
}

TEST_CASE("rate error from a count error") {
    const RatePerDecade r_act(0.0341);
    CHECK(rate_error(0.10, 332, r_act).relative ==
          doctest::Approx(0.0842).epsilon(0.0003 / 0.0842));
    CHECK(rate_error(0.10, 100, r_act).relative ==
          doctest::Approx(0.279).epsilon(0.001 / 0.279));
    const RateError none = rate_error(0.0, 777, r_act);
    CHECK(none.absolute.per_decade == doctest::Approx(0.0));
    CHECK(none.relative == doctest::Approx(0.0));
    CHECK_THROWS_AS(rate_error(-1.0, 100, r_act), DegenerateInput);
    CHECK_THROWS_AS(rate_error(-1.5, 100, r_act), DegenerateInput);
    CHECK_THROWS_AS(rate_error(0.1, 100, RatePerDecade(0.0)), DivisionByZero);
}

TEST_CASE("error table rows") {
    const RatePerDecade r_act(0.0341);
    const std::vector<double> spans = {100, 332, 839, 3742};
    const auto rows = error_table(0.10, spans, r_act);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].relative_error * 100 == doctest::Approx(27.9).epsilon(0.002));
    CHECK(rows[1].relative_error * 100 == doctest::Approx(8.42).epsilon(0.002));
    CHECK(rows[2].relative_error * 100 == doctest::Approx(3.33).epsilon(0.002));
    CHECK(rows[3].relative_error * 100 == doctest::Approx(0.747).epsilon(0.002));

    const std::vector<double> low_spans = {100, 332, 839};
    const auto low = error_table(-0.10, low_spans, r_act);
    REQUIRE(low.size() == 3);
    CHECK(-low[0].relative_error * 100 == doctest::Approx(30.9).epsilon(0.002));
    CHECK(-low[1].relative_error * 100 == doctest::Approx(9.3).epsilon(0.002));
    CHECK(-low[2].relative_error * 100 == doctest::Approx(3.6).epsilon(0.03));

    CHECK(error_table(0.10, std::vector<double>{}, r_act).empty());
}

TEST_CASE("property: estimate inverts continuous accumulation") {
    SplitMix64 rng(0x9a7e1u);
    int trials = 0;
    while (trials < 500) {
        const double n0 = std::exp(rng.next_double() * 14.0 - 1.0); // ~0.37 .. 4e5
        double r = 0.01 + rng.next_double() * 1.99;
        if (rng.next_double() < 0.5) {
            r = -r / 4.0; // negative side capped at -0.5
        }
        const double dt = 0.1 + rng.next_double() * 499.9;
        if (std::abs(r) * dt > 600.0) {
            continue; // keep exp() finite
        }
        ++trials;
        const double n2 = accumulate_exponential(n0, RatePerDecade(r), dt);
        const double t1 = 1000.0;
        const RatePerDecade back =
            estimate_rate(GrowthPair(YearCE(t1), n0, YearCE(t1 + 10.0 * dt), n2));
        CHECK(back.per_decade == doctest::Approx(r).epsilon(1e-12));
    }
}

TEST_CASE("property: rate error ignores absolute counts") {
    SplitMix64 rng(0x51aab3u);
    for (int trial = 0; trial < 200; ++trial) {
        const double n_act = 1.0 + rng.next_double() * 1e6;
        const double n_est = n_act * (0.5 + rng.next_double());
        const double span = 10.0 + rng.next_double() * 5000.0;
        const RatePerDecade r_act(0.005 + rng.next_double() * 0.1);
        const double ratio_error_small = n_est / n_act - 1.0;
        const double ratio_error_big = (n_est * 1e6) / (n_act * 1e6) - 1.0;
        const double a = rate_error(ratio_error_small, span, r_act).relative;
        const double b = rate_error(ratio_error_big, span, r_act).relative;
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("property: longer spans shrink the relative error") {
    SplitMix64 rng(0xdecade5u);
    for (int trial = 0; trial < 100; ++trial) {
        const double ratio_error = 0.01 + rng.next_double() * 0.5;
        const RatePerDecade r_act(0.01 + rng.next_double() * 0.1);
        double span = 20.0 + rng.next_double() * 100.0;
        double previous = rate_error(ratio_error, span, r_act).relative;
        for (int step = 0; step < 6; ++step) {
            span *= 1.5 + rng.next_double();
            const double current = rate_error(ratio_error, span, r_act).relative;
            CHECK(current < previous);
            previous = current;
        }
    }
}

TEST_CASE("property: discrete compounding dominates linear growth") {
    SplitMix64 rng(0x0c0ffeeu);
    for (int trial = 0; trial < 200; ++trial) {
        const double n0 = 1.0 + rng.next_double() * 1e4;
        const RatePerDecade r(0.001 + rng.next_double() * 1.5);
        const double dt = 1.0 + rng.next_double() * 40.0;
        CHECK(accumulate_exponential(n0, r, dt, Compounding::discrete) >=
              accumulate_linear(n0, r, dt));
    }
    const RatePerDecade r(0.25);
    CHECK(accumulate_exponential(100, r, 0, Compounding::discrete) ==
          doctest::Approx(accumulate_linear(100, r, 0)));
    CHECK(accumulate_exponential(100, r, 1, Compounding::discrete) ==
          doctest::Approx(accumulate_linear(100, r, 1)));
}

TEST_CASE("unit conversions") {
    const RatePerDecade r(0.0341);
    CHECK(r.per_year() == doctest::Approx(0.00341));
    CHECK(r.per_millennium() == doctest::Approx(3.41));
    CHECK(RatePerDecade::from_per_year(0.00341).per_decade == doctest::Approx(0.0341));
    CHECK(RatePerDecade::from_per_millennium(3.41).per_decade == doctest::Approx(0.0341));
}

TEST_SUITE_END();
