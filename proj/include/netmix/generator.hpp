#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "netmix/graph.hpp"
#include "netmix/model.hpp"
#include "netmix/rng.hpp"

namespace netmix {

/// Synthetic-population recipe: flip probability p sets beta = 1 - alpha = p
/// for every mode, so false positives and false negatives are equally
/// likely. p must not exceed 1/2.
struct BenchmarkConfig {
    double flip_prob = 0.0;
    int population_size = 0;
    std::vector<Graph> modes;
    std::vector<double> pi;
    std::uint64_t seed = 0;
};

struct Benchmark {
    Population pop;
    Assignment truth;
    Params params;
};

/// Each pair present independently with probability rho, in each mode.
std::vector<Graph> sample_modes_from_prior(int k, int n, double rho, Rng& rng);

/// I.i.d. categorical labels with weights pi.
Assignment sample_assignment(std::span<const double> pi, int count, Rng& rng);

/// Noisy realization of a mode: mode edges kept with probability alpha,
/// non-edges added with probability beta.
Graph sample_network(const Graph& mode, double alpha, double beta, Rng& rng);

/// Assignment drawn from pi, then one network per sample from its mode.
std::pair<Population, Assignment> sample_population(const std::vector<Graph>& modes,
                                                    const Params& params, int count,
                                                    Rng& rng);

/// Population plus the ground truth that generated it.
Benchmark make_benchmark(const BenchmarkConfig& cfg);

} // namespace netmix
