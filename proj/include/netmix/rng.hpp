#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace netmix {

/// Deterministic random stream used everywhere in the library.
///
/// Core generator: SplitMix64 (Steele, Lea & Flood 2014). The state is a
/// 64-bit counter advanced by a fixed odd increment; each output is a
/// finalizing mix of the counter, so the stream is cheap to seed, cheap to
/// split, and byte-identical on every platform. All higher-level draws
/// (normal, gamma, beta, Dirichlet, binomial, categorical) are built from
/// this stream with fixed algorithms; the combination is versioned as
/// stream contract "v1" and any change to the constants or algorithms
/// below breaks reproducibility of seeded runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Derive an independent stream keyed by (seed, a, b). Used for
    /// per-chain substreams in multi-chain runs.
    static Rng substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

    std::uint64_t next_u64();

    /// Uniform on [0, 1), 53-bit mantissa.
    double next_double();

    /// Uniform integer in [0, bound). Unbiased via rejection.
    std::uint64_t next_below(std::uint64_t bound);

    /// Standard normal (Marsaglia polar method, no cached spare).
    double normal();

    /// Gamma(shape, 1) via Marsaglia-Tsang, boosted for shape < 1.
    double gamma(double shape);

    /// Beta(a, b) as Ga/(Ga+Gb).
    double beta(double a, double b);

    /// Dirichlet(conc) written into out (same length).
    void dirichlet(std::span<const double> conc, std::span<double> out);

    /// Binomial(n, p), exact, via complement + geometric waiting times.
    /// Expected cost O(1 + n * min(p, 1-p)).
    std::int64_t binomial(std::int64_t n, double p);

    /// Index drawn from the categorical distribution with unnormalized
    /// log-weights. Stable via max-shift.
    int categorical_from_logs(std::span<const double> log_weights);

private:
    std::uint64_t state_;
};

} // namespace netmix
