#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "netgrowth/errors.hpp"
#include "netgrowth/rates.hpp"

namespace netgrowth {

// The (n, S, C) triple every entropy computation consumes. n is real-valued
// because lexicon sizes and populations are estimates, not exact counts.
struct NetworkMetrics {
    double n = 1.0;           // node count (people, words, neurons, ...)
    double path_length = 0.0; // S: mean shortest-path distance, must exceed 1
    double clustering = 0.0;  // C: mean local clustering, in [0, 1]
    std::string label;

    NetworkMetrics() = default;
    NetworkMetrics(double n_, double s, double c, std::string label_ = {})
        : n(n_), path_length(s), clustering(c), label(std::move(label_)) {
        if (!(n >= 1.0) || !std::isfinite(n)) {
            throw NonPositiveCount("NetworkMetrics: n must be >= 1");
        }
        if (!(path_length > 1.0) || !std::isfinite(path_length)) {
            throw DegenerateBase("NetworkMetrics: path length must exceed 1");
        }
        if (!(clustering >= 0.0 && clustering <= 1.0)) {
            throw BadProportion("NetworkMetrics: clustering must lie in [0, 1]");
        }
    }
};

struct NetworkEntropy {
    double eta = 0.0;
};

// eta = C * log_S(n). The multiplier by which networking scales a fixed
// two-node rate. Zero when C = 0 or n = 1.
inline NetworkEntropy entropy(const NetworkMetrics& m) {
    if (!(m.path_length > 1.0)) {
        throw DegenerateBase("entropy: path length must exceed 1");
    }
    if (!(m.clustering >= 0.0 && m.clustering <= 1.0)) {
        throw BadProportion("entropy: clustering must lie in [0, 1]");
    }
    if (!(m.n >= 1.0)) {
        throw NonPositiveCount("entropy: n must be >= 1");
    }
    return {m.clustering * std::log(m.n) / std::log(m.path_length)};
}

// Isotropic special case: C = 1 and S = e collapse the formula to ln(n).
inline NetworkEntropy isotropic_entropy(double n) {
    if (!(n >= 1.0) || !std::isfinite(n)) {
        throw NonPositiveCount("isotropic_entropy: n must be >= 1");
    }
    return {std::log(n)};
}

// Networked transmission rate: the bi-nodal rate times the network's eta.
// Works for any rate-like quantity (m/s, fraction per decade, ...).
inline double network_rate(double bi_nodal_rate, const NetworkMetrics& m) {
    return bi_nodal_rate * entropy(m).eta;
}

// Number of S-fold scaling levels in a network of n nodes: log_S(n),
// the solution of S^x = n.
inline double cluster_generations(double n, double path_length) {
    if (!(path_length > 1.0) || !std::isfinite(path_length)) {
        throw DegenerateBase("cluster_generations: base must exceed 1");
    }
    if (!(n >= 1.0) || !std::isfinite(n)) {
        throw NonPositiveCount("cluster_generations: n must be >= 1");
    }
    return std::log(n) / std::log(path_length);
}

// d(log_S n)/dn evaluated at n = S^eta: the per-node receive capacity,
// 1 / (ln(S) * S^eta).
inline double receive_capacity_derivative(double path_length, double eta) {
    if (!(path_length > 1.0) || !std::isfinite(path_length)) {
        throw DegenerateBase("receive_capacity_derivative: base must exceed 1");
    }
    return 1.0 / (std::log(path_length) * std::pow(path_length, eta));
}

// Distance from the isotropic fixed point S = e. Zero exactly when
// ln(S) = 1, i.e. when transmit and receive capacities balance.
inline double isotropy_gap(double path_length) {
    if (!(path_length > 1.0) || !std::isfinite(path_length)) {
        throw DegenerateBase("isotropy_gap: base must exceed 1");
    }
    return std::abs(path_length - std::exp(1.0));
}

// Entropy of one network averaged over the endpoints of a period.
// Averaging happens per network, before any product of etas is formed;
// multiplying first and averaging after gives a different (wrong) number.
struct EtaPeriodAverage {
    YearCE t1;
    YearCE t2;
    double eta_start = 0.0;
    double eta_end = 0.0;
    double eta_avg = 0.0;
};

inline EtaPeriodAverage average_eta(const NetworkMetrics& start, const NetworkMetrics& end,
                                    YearCE t1 = YearCE{}, YearCE t2 = YearCE{}) {
    EtaPeriodAverage out;
    out.t1 = t1;
    out.t2 = t2;
    out.eta_start = entropy(start).eta;
    out.eta_end = entropy(end).eta;
    out.eta_avg = 0.5 * (out.eta_start + out.eta_end);
    return out;
}

inline double eta_product(std::span<const double> etas) {
    if (etas.empty()) {
        throw EmptyInput("eta_product: need at least one eta");
    }
    double product = 1.0;
    for (double e : etas) {
        product *= e;
    }
    return product;
}

// Ratio of the eta products of two groups of networks.
inline double compare_eta_products(std::span<const NetworkMetrics> a,
                                   std::span<const NetworkMetrics> b) {
    if (a.empty() || b.empty()) {
        throw EmptyInput("compare_eta_products: both groups must be nonempty");
    }
    double num = 1.0;
    for (const auto& m : a) {
        num *= entropy(m).eta;
    }
    double den = 1.0;
    for (const auto& m : b) {
        den *= entropy(m).eta;
    }
    if (den == 0.0) {
        throw DivisionByZero("compare_eta_products: denominator product is zero");
    }
    return num / den;
}

} // namespace netgrowth
