#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "netgrowth/bigint.hpp"
#include "netgrowth/entropy.hpp"
#include "netgrowth/errors.hpp"
#include "netgrowth/rates.hpp"

namespace netgrowth {

// Per-individual problem-solving rate with no networking and no inherited
// knowledge. Conventionally quoted per millennium.
struct InnateRate {
    double per_millennium = 0.0;

    InnateRate() = default;
    explicit InnateRate(double fraction_per_millennium)
        : per_millennium(fraction_per_millennium) {
        if (!std::isfinite(per_millennium)) {
            throw DegenerateInput("InnateRate: rate must be finite");
        }
    }

    double per_year() const { return per_millennium / 1000.0; }
    double per_decade() const { return per_millennium / 100.0; }
};

// Solve collective = innate * eta(pop) * eta(solved problems) for the innate
// rate, given the period-averaged entropies.
inline InnateRate innate_rate(RatePerDecade collective_rate, double eta_pop_avg,
                              double eta_ps_avg) {
    if (!(eta_pop_avg > 0.0) || !(eta_ps_avg > 0.0)) {
        throw DivisionByZero("innate_rate: both averaged etas must be positive");
    }
    const double per_decade = collective_rate.per_decade / (eta_pop_avg * eta_ps_avg);
    return InnateRate(per_decade * 100.0);
}

// Divergence rate of two related languages, re-anchored to a revised age of
// the ancestral language. per_branch is the one-language share: the two
// daughters drift apart at twice the rate either drifts from the ancestor.
struct DivergenceRates {
    double raw_per_millennium = 0.0;
    double adjusted_per_millennium = 0.0;
    double per_branch_per_millennium = 0.0;
};

inline DivergenceRates adjusted_swadesh(double raw_per_millennium,
                                        double original_age_years,
                                        double revised_age_years) {
    if (!(original_age_years > 0.0) || !(revised_age_years > 0.0)) {
        throw NonPositiveCount("adjusted_swadesh: ages must be positive");
    }
    DivergenceRates out;
    out.raw_per_millennium = raw_per_millennium;
    out.adjusted_per_millennium =
        raw_per_millennium * original_age_years / revised_age_years;
    out.per_branch_per_millennium = out.adjusted_per_millennium / 2.0;
    return out;
}

// Inverse of the halving above.
inline double divergence_from_branches(double branch_rate_per_millennium) {
    return 2.0 * branch_rate_per_millennium;
}

// Origin date of a system growing at a constant basal rate:
// t1 = t2 - ln(n_now / n_origin) / (m per year).
struct DatingResult {
    YearCE origin;
    double years_before_t2 = 0.0;
};

inline DatingResult date_origin(double n_now, double n_origin, YearCE t2, InnateRate m) {
    if (!(n_origin > 0.0)) {
        throw NonPositiveCount("date_origin: origin count must be positive");
    }
    if (!(n_now > n_origin)) {
        throw BadOrdering("date_origin: present count must exceed origin count");
    }
    if (m.per_millennium == 0.0) {
        throw DivisionByZero("date_origin: basal rate must be nonzero");
    }
    DatingResult out;
    out.years_before_t2 = std::log(n_now / n_origin) / m.per_year();
    out.origin = YearCE(t2.value - out.years_before_t2);
    return out;
}

// Productivity growth of an economy: individual rate times averaged
// population entropy times labor participation. Reported per year; the
// per-decade intermediate stays visible because the decade-to-year hop is
// where published figures most easily go wrong.
struct EconInputs {
    RatePerDecade individual_rate;
    double eta_pop_avg = 0.0;
    double labor_participation = 0.0;

    EconInputs() = default;
    EconInputs(RatePerDecade rate, double eta_pop, double lp)
        : individual_rate(rate), eta_pop_avg(eta_pop), labor_participation(lp) {
        if (!(labor_participation > 0.0 && labor_participation <= 1.0)) {
            throw BadProportion("EconInputs: labor participation must lie in (0, 1]");
        }
        if (!(eta_pop_avg >= 0.0) || !std::isfinite(eta_pop_avg)) {
            throw DegenerateInput("EconInputs: eta must be a nonnegative real");
        }
    }
};

struct EconGrowth {
    double per_decade = 0.0;
    double per_year = 0.0;
};

inline EconGrowth economic_growth(const EconInputs& in) {
    EconGrowth out;
    out.per_decade =
        in.individual_rate.per_decade * in.eta_pop_avg * in.labor_participation;
    out.per_year = out.per_decade / 10.0;
    return out;
}

// Proportionality index for productivity: eta(pop)^2 * eta(solved problems).
inline double productivity_proportionality(double eta_pop, double eta_ps) {
    return eta_pop * eta_pop * eta_ps;
}

// Life-expectancy observations, compared against the long-run collective
// problem-solving rate.
struct LongevityRecord {
    std::string label;
    GrowthPair observations; // counts are life expectancies in years

    LongevityRecord() = default;
    LongevityRecord(std::string label_, YearCE t1, double le1, YearCE t2, double le2)
        : label(std::move(label_)), observations(t1, le1, t2, le2) {}
};

struct LongevityRate {
    std::string label;
    RatePerDecade rate;
    double excess_vs_baseline = 0.0; // (rate - baseline) / baseline
};

inline constexpr double kCollectiveRateBaseline = 0.0341; // per decade

inline std::vector<LongevityRate> longevity_rates(
    std::span<const LongevityRecord> records,
    RatePerDecade baseline = RatePerDecade(kCollectiveRateBaseline)) {
    if (baseline.per_decade == 0.0) {
        throw DivisionByZero("longevity_rates: baseline must be nonzero");
    }
    std::vector<LongevityRate> out;
    out.reserve(records.size());
    for (const auto& rec : records) {
        LongevityRate row;
        row.label = rec.label;
        row.rate = estimate_rate(rec.observations);
        row.excess_vs_baseline =
            (row.rate.per_decade - baseline.per_decade) / baseline.per_decade;
        out.push_back(std::move(row));
    }
    return out;
}

// Number of ways to distribute r indistinguishable units among n receivers:
// (n+r-1)! / ((n-1)! r!), computed exactly, plus the Stirling estimate of its
// log and how far off the estimate is.
struct DistributionCount {
    BigUint exact;
    double log_exact = 0.0;
    double stirling_log = 0.0;
    double relative_log_error = 0.0;
};

namespace detail {
// ln(x!) by Stirling with the sqrt(2*pi*x) correction; exact at 0 and 1.
inline double stirling_log_factorial(double x) {
    if (x < 2.0) {
        return 0.0;
    }
    return x * std::log(x) - x + 0.5 * std::log(2.0 * 3.14159265358979323846 * x);
}
} // namespace detail

inline DistributionCount distribution_count(std::uint32_t n, std::uint32_t r) {
    if (n < 1) {
        throw NonPositiveCount("distribution_count: need at least one receiver");
    }
    if (static_cast<std::uint64_t>(n) + r - 1 > 0xffffffffULL) {
        throw DegenerateInput("distribution_count: n + r too large");
    }
    DistributionCount out;
    out.exact = BigUint(1);
    // Binomial (n+r-1 choose r) as a running product; each partial product is
    // itself a binomial coefficient, so every division is exact.
    for (std::uint32_t i = 1; i <= r; ++i) {
        out.exact.multiply(n - 1 + i);
        out.exact.divide(i);
    }
    out.log_exact = out.exact.log_natural();
    out.stirling_log = detail::stirling_log_factorial(static_cast<double>(n) + r - 1.0) -
                       detail::stirling_log_factorial(static_cast<double>(n) - 1.0) -
                       detail::stirling_log_factorial(static_cast<double>(r));
    if (out.log_exact > 0.0) {
        out.relative_log_error =
            std::abs(out.stirling_log - out.log_exact) / out.log_exact;
    } else {
        out.relative_log_error = std::abs(out.stirling_log - out.log_exact);
    }
    return out;
}

} // namespace netgrowth
