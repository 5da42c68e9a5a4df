#include "netmix/rng.hpp"

#include <cmath>
#include <limits>

#include "netmix/errors.hpp"

namespace netmix {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

} // namespace

Rng Rng::substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return Rng(mix64(seed + kGamma * (1 + a)) ^ mix64(b + kGamma));
}

std::uint64_t Rng::next_u64() {
    state_ += kGamma;
    return mix64(state_);
}

double Rng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0)
        throw validation_error("next_below: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold)
            return r % bound;
    }
}

double Rng::normal() {
    for (;;) {
        const double u = 2.0 * next_double() - 1.0;
        const double v = 2.0 * next_double() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0)
            return u * std::sqrt(-2.0 * std::log(s) / s);
    }
}

double Rng::gamma(double shape) {
    if (!(shape > 0.0))
        throw validation_error("gamma: shape must be positive");
    if (shape < 1.0) {
        // Boost: G(a) = G(a+1) * U^(1/a)
        const double g = gamma(shape + 1.0);
        double u = next_double();
        if (u <= 0.0)
            u = std::numeric_limits<double>::min();
        return g * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = next_double();
        if (u < 1.0 - 0.0331 * x * x * x * x)
            return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
            return d * v;
    }
}

double Rng::beta(double a, double b) {
    const double x = gamma(a);
    const double y = gamma(b);
    const double s = x + y;
    if (s <= 0.0)
        return 0.5; // both gammas underflowed; caller clamps anyway
    return x / s;
}

void Rng::dirichlet(std::span<const double> conc, std::span<double> out) {
    if (conc.size() != out.size())
        throw validation_error("dirichlet: size mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < conc.size(); ++i) {
        out[i] = gamma(conc[i]);
        sum += out[i];
    }
    if (sum <= 0.0) {
        const double w = 1.0 / static_cast<double>(out.size());
        for (auto& x : out)
            x = w;
        return;
    }
    for (auto& x : out)
        x /= sum;
}

std::int64_t Rng::binomial(std::int64_t n, double p) {
    if (n < 0)
        throw validation_error("binomial: n must be nonnegative");
    if (n == 0 || p <= 0.0)
        return 0;
    if (p >= 1.0)
        return n;
    if (p > 0.5)
        return n - binomial(n, 1.0 - p);
    // Geometric waiting times: skip = #failures before the next success.
    const double log_q = std::log1p(-p);
    std::int64_t count = 0;
    std::int64_t pos = 0;
    for (;;) {
        double u = 1.0 - next_double(); // (0, 1]
        const double skip = std::floor(std::log(u) / log_q);
        if (skip >= static_cast<double>(n - pos + 1))
            break;
        pos += static_cast<std::int64_t>(skip) + 1;
        if (pos > n)
            break;
        ++count;
    }
    return count;
}

int Rng::categorical_from_logs(std::span<const double> log_weights) {
    if (log_weights.empty())
        throw validation_error("categorical_from_logs: empty weights");
    double max_log = log_weights[0];
    for (const double w : log_weights)
        max_log = std::max(max_log, w);
    double total = 0.0;
    for (const double w : log_weights)
        total += std::exp(w - max_log);
    const double u = next_double() * total;
    double cum = 0.0;
    for (std::size_t k = 0; k + 1 < log_weights.size(); ++k) {
        cum += std::exp(log_weights[k] - max_log);
        if (u < cum)
            return static_cast<int>(k);
    }
    return static_cast<int>(log_weights.size()) - 1;
}

} // namespace netmix
