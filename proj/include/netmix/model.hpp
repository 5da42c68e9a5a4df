#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "netmix/errors.hpp"

namespace netmix {

/// Rates are kept away from {0, 1} so every log in the likelihood stays
/// finite; agreement exponents scale like n^2, so raw probabilities are
/// useless anyway.
constexpr double kRateFloor = 1e-12;

inline double clamp_rate(double x) {
    return std::min(1.0 - kRateFloor, std::max(kRateFloor, x));
}

/// Hard assignment of each sample to one of K modes (dense encoding of the
/// one-hot assignment matrix).
struct Assignment {
    int num_modes = 0;
    std::vector<int> labels;

    Assignment() = default;
    Assignment(int k, std::vector<int> l) : num_modes(k), labels(std::move(l)) {
        if (k < 1)
            throw validation_error("Assignment: mode count must be >= 1");
        for (const int g : labels)
            if (g < 0 || g >= k)
                throw validation_error("Assignment: label out of range");
    }

    int size() const { return static_cast<int>(labels.size()); }

    std::vector<int> cluster_sizes() const {
        std::vector<int> sizes(num_modes, 0);
        for (const int g : labels)
            ++sizes[g];
        return sizes;
    }

    bool operator==(const Assignment&) const = default;
};

/// Per-mode error rates, mixture weights, and the prior edge density.
struct Params {
    std::vector<double> alpha; // true-positive rate per mode
    std::vector<double> beta;  // false-positive rate per mode
    std::vector<double> pi;    // mixture weights, on the simplex
    double rho = 0.5;          // prior edge density of the modes

    int num_modes() const { return static_cast<int>(alpha.size()); }

    void validate() const {
        const std::size_t k = alpha.size();
        if (k == 0 || beta.size() != k || pi.size() != k)
            throw validation_error("Params: alpha/beta/pi must share a positive length");
        auto in01 = [](double x) { return x >= 0.0 && x <= 1.0; };
        for (std::size_t u = 0; u < k; ++u)
            if (!in01(alpha[u]) || !in01(beta[u]) || !in01(pi[u]))
                throw validation_error("Params: rates and weights must lie in [0,1]");
        if (!in01(rho))
            throw validation_error("Params: rho must lie in [0,1]");
        double s = 0.0;
        for (const double p : pi)
            s += p;
        if (std::abs(s - 1.0) > 1e-9)
            throw validation_error("Params: pi must sum to 1");
    }

    /// Clamp every rate into [kRateFloor, 1-kRateFloor] and renormalize pi.
    void clamp() {
        for (auto& a : alpha)
            a = clamp_rate(a);
        for (auto& b : beta)
            b = clamp_rate(b);
        rho = clamp_rate(rho);
        double s = 0.0;
        for (auto& p : pi) {
            p = clamp_rate(p);
            s += p;
        }
        for (auto& p : pi)
            p /= s;
    }

    bool operator==(const Params&) const = default;
};

/// Conjugate-prior pseudo-counts: beta priors for the rates and the edge
/// density, Dirichlet for the mixture weights. All entries must be
/// positive; all-ones reproduces flat priors.
struct Hyperparams {
    std::vector<double> h11, h01; // Beta(h11, h01) prior on alpha_u
    std::vector<double> h10, h00; // Beta(h10, h00) prior on beta_u
    double a_star = 1.0, b_star = 1.0; // Beta(a*, b*) prior on rho
    std::vector<double> gamma; // Dirichlet(gamma) prior on pi

    static Hyperparams flat(int k) {
        Hyperparams h;
        h.h11.assign(k, 1.0);
        h.h01.assign(k, 1.0);
        h.h10.assign(k, 1.0);
        h.h00.assign(k, 1.0);
        h.gamma.assign(k, 1.0);
        return h;
    }

    int num_modes() const { return static_cast<int>(h11.size()); }

    void validate() const {
        const std::size_t k = h11.size();
        if (k == 0 || h01.size() != k || h10.size() != k || h00.size() != k ||
            gamma.size() != k)
            throw validation_error("Hyperparams: vectors must share a positive length");
        auto pos = [](double x) { return x > 0.0 && std::isfinite(x); };
        for (std::size_t u = 0; u < k; ++u)
            if (!pos(h11[u]) || !pos(h01[u]) || !pos(h10[u]) || !pos(h00[u]) ||
                !pos(gamma[u]))
                throw validation_error("Hyperparams: pseudo-counts must be positive");
        if (!pos(a_star) || !pos(b_star))
            throw validation_error("Hyperparams: a*/b* must be positive");
    }

    bool operator==(const Hyperparams&) const = default;
};

} // namespace netmix
