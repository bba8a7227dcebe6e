#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "netgrowth/errors.hpp"

namespace netgrowth {

// Calendar year. B.C.E. years are stored negated (1750 B.C.E. -> -1750) with
// no year-zero correction, so the span from 1750 B.C.E. to 1992 C.E. is
// exactly 3742 years under plain subtraction.
struct YearCE {
    double value = 0.0;

    YearCE() = default;
    explicit YearCE(double year) : value(year) {
        if (!std::isfinite(year)) {
            throw DegenerateInput("YearCE: year must be finite");
        }
    }

    friend constexpr bool operator<(YearCE a, YearCE b) { return a.value < b.value; }
    friend constexpr bool operator==(YearCE a, YearCE b) { return a.value == b.value; }
};

inline double years_between(YearCE t1, YearCE t2) { return t2.value - t1.value; }
inline double decades_between(YearCE t1, YearCE t2) { return (t2.value - t1.value) / 10.0; }

// Canonical growth-rate unit: dimensionless fraction per decade
// (0.0341 means 3.41% per decade). Everything else converts through this.
struct RatePerDecade {
    double per_decade = 0.0;

    RatePerDecade() = default;
    explicit RatePerDecade(double fraction_per_decade) : per_decade(fraction_per_decade) {
        if (!std::isfinite(fraction_per_decade)) {
            throw DegenerateInput("RatePerDecade: rate must be finite");
        }
    }

    double per_year() const { return per_decade / 10.0; }
    double per_millennium() const { return per_decade * 100.0; }

    static RatePerDecade from_per_year(double r) { return RatePerDecade(r * 10.0); }
    static RatePerDecade from_per_millennium(double r) { return RatePerDecade(r / 100.0); }
};

// Two timestamped counts. The only observation shape the estimators need.
struct GrowthPair {
    YearCE t1;
    double n1 = 0.0;
    YearCE t2;
    double n2 = 0.0;

    GrowthPair() = default;
    GrowthPair(YearCE t1_, double n1_, YearCE t2_, double n2_)
        : t1(t1_), n1(n1_), t2(t2_), n2(n2_) {
        if (!(n1 > 0.0) || !std::isfinite(n1)) {
            throw NonPositiveCount("GrowthPair: n1 must be positive");
        }
        if (!(n2 > 0.0) || !std::isfinite(n2)) {
            throw NonPositiveCount("GrowthPair: n2 must be positive");
        }
        if (!(t1 < t2)) {
            throw TimeOrder("GrowthPair: t2 must be later than t1");
        }
    }

    double decades() const { return decades_between(t1, t2); }
};

enum class Compounding { discrete, continuous };

namespace detail {
inline void require_positive_count(double n0, const char* what) {
    if (!(n0 > 0.0) || !std::isfinite(n0)) {
        throw NonPositiveCount(std::string(what) + ": count must be positive");
    }
}
} // namespace detail

// Linear accumulation: (1 + r*dt) * n0, dt in decades.
inline double accumulate_linear(double n0, RatePerDecade r, double dt_decades) {
    detail::require_positive_count(n0, "accumulate_linear");
    if (dt_decades < 0.0) {
        throw DegenerateInput("accumulate_linear: dt must be nonnegative");
    }
    return (1.0 + r.per_decade * dt_decades) * n0;
}

// Compound accumulation. Discrete compounding grows by (1+r)^dt;
// continuous compounding (the default model everywhere in this library)
// grows by exp(r*dt).
inline double accumulate_exponential(double n0, RatePerDecade r, double dt_decades,
                                     Compounding compounding = Compounding::continuous) {
    detail::require_positive_count(n0, "accumulate_exponential");
    if (dt_decades < 0.0) {
        throw DegenerateInput("accumulate_exponential: dt must be nonnegative");
    }
    if (compounding == Compounding::discrete) {
        return std::pow(1.0 + r.per_decade, dt_decades) * n0;
    }
    return n0 * std::exp(r.per_decade * dt_decades);
}

// Average continuous rate per decade between two observations:
// r = ln(n2/n1) / decades.
inline RatePerDecade estimate_rate(const GrowthPair& obs) {
    return RatePerDecade(std::log(obs.n2 / obs.n1) / obs.decades());
}

// Rate when only the growth ratio n2/n1 and the span in years are known.
inline RatePerDecade rate_from_ratio(double ratio, double span_years) {
    if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        throw NonPositiveCount("rate_from_ratio: ratio must be positive");
    }
    if (!(span_years > 0.0)) {
        throw DegenerateInput("rate_from_ratio: span must be positive");
    }
    return RatePerDecade(std::log(ratio) / (span_years / 10.0));
}

// Effect of a fractional error in the later count on the rate estimate.
// A ratio_error of +0.10 means the later count was overestimated by 10%.
struct RateError {
    RatePerDecade absolute; // error in the estimated rate, per decade
    double relative = 0.0;  // absolute error divided by the actual rate
};

inline RateError rate_error(double ratio_error, double span_years, RatePerDecade r_act) {
    if (!(ratio_error > -1.0)) {
        throw DegenerateInput("rate_error: ratio error must exceed -1");
    }
    if (!(span_years > 0.0)) {
        throw DegenerateInput("rate_error: span must be positive");
    }
    if (r_act.per_decade == 0.0) {
        throw DivisionByZero("rate_error: actual rate must be nonzero");
    }
    RateError out;
    out.absolute = RatePerDecade(std::log1p(ratio_error) / (span_years / 10.0));
    out.relative = out.absolute.per_decade / r_act.per_decade;
    return out;
}

// One row of a sensitivity table: how big the relative rate error is for a
// given span. For a fixed ratio error the magnitude shrinks as spans grow.
struct ErrorTableRow {
    double span_years = 0.0;
    double relative_error = 0.0; // signed; negative when the count was underestimated
};

inline std::vector<ErrorTableRow> error_table(double ratio_error,
                                              std::span<const double> spans,
                                              RatePerDecade r_act) {
    std::vector<ErrorTableRow> rows;
    rows.reserve(spans.size());
    for (double span : spans) {
        rows.push_back({span, rate_error(ratio_error, span, r_act).relative});
    }
    return rows;
}

} // namespace netgrowth
