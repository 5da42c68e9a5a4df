#pragma once

#include <cstdint>
#include <vector>

#include "netmix/graph.hpp"
#include "netmix/model.hpp"
#include "netmix/rng.hpp"
#include "netmix/suffstats.hpp"

namespace netmix {

struct ChainConfig {
    int num_modes = 1;   // K
    int sweeps = 1000;
    int burn_in = -1;    // negative: default to sweeps / 5
    int thin = 1;
    std::uint64_t seed = 0;
    Hyperparams hyper;   // sized to num_modes; empty: flat
    bool metric_constrained = false; // tie alpha_u = 1 - beta_u in the params step

    /// Copy with defaults resolved and everything validated.
    ChainConfig normalized() const;
};

struct ChainState {
    std::vector<Graph> modes;
    Assignment g;
    Params params;
    SuffStats stats; // always consistent with (pop, g, modes)
    Rng rng;
};

/// Operation counts for one mode update, tracking the grouped-binomial
/// sampler's work: one entry per processed occurrence group plus the draws
/// and rejected proposals. Stays far below K*C(n,2) on sparse populations.
struct ModeUpdateCounters {
    std::uint64_t groups = 0;
    std::uint64_t edges_drawn = 0;
    std::uint64_t rejections = 0;
};

struct SweepDiagnostics {
    double mode_update_seconds = 0.0;
    ModeUpdateCounters counters;
};

struct TraceSample {
    int sweep_index = 0;
    double log_posterior = 0.0;
    double log_likelihood = 0.0;
    std::vector<Graph> modes;
    Assignment g;
    Params params;
};

struct Trace {
    ChainConfig config;
    int n = 0;               // node count of the fitted population
    int population_size = 0; // N
    std::vector<TraceSample> samples;
    std::vector<SweepDiagnostics> diagnostics; // one entry per sweep
};

/// Posterior probability that a pair observed x times in a cluster of n_u
/// samples is an edge of that cluster's mode.
double edge_inclusion_prob(std::int64_t x, std::int64_t n_u, const Params& params, int u);

/// Draw all K modes given counts and rates. Pairs are grouped by their
/// occurrence count; per group one binomial fixes the number of edges and
/// a uniform subset picks them. Never-observed pairs are handled through
/// their count alone, with chosen edges rejection-sampled from all pairs.
std::vector<Graph> sample_modes(const SuffStats& stats, const Params& params, Rng& rng,
                                ModeUpdateCounters* counters = nullptr);

/// Conditional assignment probabilities R_tu, row-major N x K.
std::vector<double> assignment_probabilities(const Population& pop,
                                             const std::vector<Graph>& modes,
                                             const Params& params);

/// Independent categorical draw of each sample's mode given modes + rates.
Assignment sample_assignment_conditional(const Population& pop,
                                         const std::vector<Graph>& modes,
                                         const Params& params, Rng& rng);

/// Conjugate draws of alpha, beta, rho (beta distributions) and pi
/// (Dirichlet) from agreement counts plus pseudo-counts.
Params sample_params_conditional(const SuffStats& stats, const Hyperparams& hyper,
                                 Rng& rng);

/// Random start: uniform labels, parameters from their prior, modes from
/// their conditional given those.
ChainState make_initial_state(const Population& pop, const ChainConfig& cfg);

/// One Gibbs sweep: modes, then assignments, then parameters, with the
/// sufficient statistics maintained incrementally after each block.
void sweep(ChainState& state, const Population& pop, const ChainConfig& cfg,
           SweepDiagnostics* diag = nullptr);

/// Full run: initialize, sweep, record every thin-th post-burn-in state
/// with its log posterior. Deterministic given cfg.seed.
Trace run_chain(const Population& pop, const ChainConfig& cfg);

} // namespace netmix
