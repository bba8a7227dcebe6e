#include <cmath>
#include <vector>

#include <doctest.h>

#include "netgrowth/entropy.hpp"
#include "netgrowth/rng.hpp"

using namespace netgrowth;

TEST_SUITE_BEGIN("entropy");

TEST_CASE("network entropy on stored networks") {
    CHECK(entropy(NetworkMetrics(225226, 3.65, 0.79)).eta ==
          doctest::Approx(7.52).epsilon(0.01 / 7.52));
    CHECK(entropy(NetworkMetrics(1e11, 2.49, 0.53)).eta ==
          doctest::Approx(14.71).epsilon(0.01 / 14.71));
    CHECK(entropy(NetworkMetrics(616500, 2.67, 0.437)).eta ==
          doctest::Approx(5.932).epsilon(0.005 / 5.932));
    // log_S(S) = 1 when C = 1.
    CHECK(entropy(NetworkMetrics(3.2, 3.2, 1.0)).eta == doctest::Approx(1.0));
}

TEST_CASE("entropy edge cases and domain errors") {
    CHECK(entropy(NetworkMetrics(1000, 2.5, 0.0)).eta == doctest::Approx(0.0));
    CHECK(entropy(NetworkMetrics(1.0, 2.5, 0.7)).eta == doctest::Approx(0.0));
    CHECK_THROWS_AS(NetworkMetrics(100, 1.0, 0.5), DegenerateBase);
    CHECK_THROWS_AS(NetworkMetrics(100, 0.8, 0.5), DegenerateBase);
    CHECK_THROWS_AS(NetworkMetrics(100, 2.5, 1.2), BadProportion);
    CHECK_THROWS_AS(NetworkMetrics(100, 2.5, -0.1), BadProportion);
    CHECK_THROWS_AS(NetworkMetrics(0.5, 2.5, 0.5), NonPositiveCount);
}

TEST_CASE("isotropic entropy is the natural log") {
    CHECK(isotropic_entropy(1.0).eta == doctest::Approx(0.0));
    CHECK(isotropic_entropy(std::exp(1.0)).eta == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(isotropic_entropy(616500).eta ==
          doctest::Approx(13.3318136).epsilon(1e-7));
    CHECK(isotropic_entropy(616500).eta == doctest::Approx(std::log(616500.0)));
    CHECK_THROWS_AS(isotropic_entropy(0.0), NonPositiveCount);
}

TEST_CASE("network rate multiplies the bi-nodal rate") {
    const NetworkMetrics unit_eta(3.2, 3.2, 1.0);
    CHECK(network_rate(0.875, unit_eta) == doctest::Approx(0.875));
    const NetworkMetrics brain(1e11, 2.49, 0.53);
    CHECK(network_rate(100.0, brain) == doctest::Approx(1471.0).epsilon(1.0 / 1471.0));
    const NetworkMetrics actors(225226, 3.65, 0.79);
    CHECK(network_rate(1.0, actors) == doctest::Approx(7.52).epsilon(0.01 / 7.52));
}

TEST_CASE("cluster generations") {
    CHECK(cluster_generations(std::pow(2.5, 3.0), 2.5) ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK(cluster_generations(225226, 3.65) ==
          doctest::Approx(9.519).epsilon(0.005 / 9.519));
    CHECK(cluster_generations(1.0, 4.2) == doctest::Approx(0.0));
    CHECK_THROWS_AS(cluster_generations(10, 1.0), DegenerateBase);
}

TEST_CASE("property: S^(eta/C) recovers n") {
    SplitMix64 rng(0xe7a5u);
    for (int trial = 0; trial < 1000; ++trial) {
        const double s = 1.5 + rng.next_double() * 4.5;
        const double c = 0.05 + rng.next_double() * 0.95;
        const double n = 2.0 + rng.next_double() * 1e9;
        const double eta = entropy(NetworkMetrics(n, s, c)).eta;
        CHECK(std::pow(s, eta / c) == doctest::Approx(n).epsilon(1e-9));
        const double generations = cluster_generations(n, s);
        CHECK(std::pow(s, generations) == doctest::Approx(n).epsilon(1e-9));
    }
}

TEST_CASE("receive capacity derivative") {
    const double e = std::exp(1.0);
    CHECK(receive_capacity_derivative(e, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(receive_capacity_derivative(e, std::log(10.0)) ==
          doctest::Approx(0.1).epsilon(1e-12));
    CHECK_THROWS_AS(receive_capacity_derivative(1.0, 2.0), DegenerateBase);
}

TEST_CASE("property: derivative matches a central finite difference") {
    SplitMix64 rng(0xd1ffu);
    for (int trial = 0; trial < 300; ++trial) {
        const double s = 1.5 + rng.next_double() * 4.0;
        const double eta = 0.1 + rng.next_double() * 9.9;
        const double n = std::pow(s, eta);
        const double h = n * 1e-5;
        const double fd = (cluster_generations(n + h, s) - cluster_generations(n - h, s)) /
                          (2.0 * h);
        CHECK(receive_capacity_derivative(s, eta) ==
              doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("isotropy gap") {
    CHECK(isotropy_gap(std::exp(1.0)) == 0.0);
    CHECK(isotropy_gap(2.67) == doctest::Approx(0.0483).epsilon(0.0001 / 0.0483));
    CHECK(isotropy_gap(3.65) == doctest::Approx(0.932).epsilon(0.001 / 0.932));
    CHECK_THROWS_AS(isotropy_gap(0.9), DegenerateBase);
}

TEST_CASE("period-averaged etas reproduce the stored products") {
    const NetworkMetrics pop1150(2.3e6, 3.65, 0.79);
    const NetworkMetrics pop1657(5281347, 3.65, 0.79);
    const NetworkMetrics pop1989(3.5e8, 3.65, 0.79);
    const NetworkMetrics lex1150(34020, 2.67, 0.437);
    const NetworkMetrics lex1657(200000, 2.67, 0.437);
    const NetworkMetrics lex1989(616500, 2.67, 0.437);

    const auto pop_a = average_eta(pop1150, pop1989, YearCE(1150), YearCE(1989));
    CHECK(pop_a.eta_avg == doctest::Approx(10.47).epsilon(0.01 / 10.47));
    const auto lex_a = average_eta(lex1150, lex1989);
    CHECK(lex_a.eta_avg == doctest::Approx(5.29).epsilon(0.01 / 5.29));

    const auto pop_b = average_eta(pop1657, pop1989);
    CHECK(pop_b.eta_avg == doctest::Approx(10.72).epsilon(0.01 / 10.72));
    const auto lex_b = average_eta(lex1657, lex1989);
    CHECK(lex_b.eta_avg == doctest::Approx(5.68).epsilon(0.01 / 5.68));

    // Averaging happens per network before multiplying; the products land on
    // the stored values only in that order.
    const std::vector<double> first = {pop_a.eta_avg, lex_a.eta_avg};
    CHECK(eta_product(first) == doctest::Approx(55.37).epsilon(0.05 / 55.37));
    const std::vector<double> second = {pop_b.eta_avg, lex_b.eta_avg};
    CHECK(eta_product(second) == doctest::Approx(60.94).epsilon(0.05 / 60.94));

    const double multiply_then_average =
        0.5 * (entropy(pop1150).eta * entropy(lex1150).eta +
               entropy(pop1989).eta * entropy(lex1989).eta);
    CHECK(multiply_then_average == doctest::Approx(56.34).epsilon(0.01));
    CHECK(std::abs(multiply_then_average - eta_product(first)) > 0.5);

    const auto same = average_eta(pop1989, pop1989);
    CHECK(same.eta_avg == doctest::Approx(entropy(pop1989).eta));
}

TEST_CASE("eta products") {
    const std::vector<double> single = {4.25};
    CHECK(eta_product(single) == doctest::Approx(4.25));
    const std::vector<double> rounded = {10.47, 5.29};
    CHECK(eta_product(rounded) == doctest::Approx(55.3863).epsilon(1e-10));
    const std::vector<double> rounded2 = {10.72, 5.68};
    CHECK(eta_product(rounded2) == doctest::Approx(60.8896).epsilon(1e-10));
    CHECK_THROWS_AS(eta_product(std::vector<double>{}), EmptyInput);
}

TEST_CASE("comparing eta products across societies") {
    const std::vector<NetworkMetrics> modern = {NetworkMetrics(3.5e8, 3.65, 0.79),
                                                NetworkMetrics(616500, 2.67, 0.437)};
    const std::vector<NetworkMetrics> primitive = {NetworkMetrics(150, 3.65, 0.79),
                                                   NetworkMetrics(100, 2.67, 0.437)};
    CHECK(compare_eta_products(modern, primitive) ==
          doctest::Approx(11.37).epsilon(0.02 / 11.37));

    CHECK(compare_eta_products(modern, modern) == doctest::Approx(1.0));

    const std::vector<NetworkMetrics> brain = {NetworkMetrics(1e11, 2.49, 0.53)};
    const std::vector<NetworkMetrics> worm = {NetworkMetrics(282, 2.65, 0.28)};
    CHECK(compare_eta_products(brain, worm) == doctest::Approx(9.08).epsilon(0.02 / 9.08));

    const std::vector<NetworkMetrics> zero = {NetworkMetrics(100, 2.5, 0.0)};
    CHECK_THROWS_AS(compare_eta_products(brain, zero), DivisionByZero);
    CHECK_THROWS_AS(compare_eta_products({}, worm), EmptyInput);
}

TEST_CASE("property: base-change identity") {
    SplitMix64 rng(0xbad9eu);
    for (int trial = 0; trial < 500; ++trial) {
        const double s = 1.2 + rng.next_double() * 6.0;
        const double c = rng.next_double();
        const double n = 1.0 + rng.next_double() * 1e10;
        const double via_ln = entropy(NetworkMetrics(n, s, c)).eta;
        const double via_log10 = c * std::log10(n) / std::log10(s);
        CHECK(via_ln == doctest::Approx(via_log10).epsilon(1e-12));
    }
}

TEST_CASE("property: monotone in n and C, antitone in S") {
    SplitMix64 rng(0x300du);
    for (int trial = 0; trial < 300; ++trial) {
        const double s = 1.5 + rng.next_double() * 4.0;
        const double c = 0.1 + rng.next_double() * 0.8;
        const double n = 10.0 + rng.next_double() * 1e8;
        const double base = entropy(NetworkMetrics(n, s, c)).eta;
        CHECK(entropy(NetworkMetrics(n * 1.5, s, c)).eta > base);
        CHECK(entropy(NetworkMetrics(n, s, c + 0.05)).eta > base);
        CHECK(entropy(NetworkMetrics(n, s + 0.5, c)).eta < base);
    }
}

TEST_SUITE_END();
