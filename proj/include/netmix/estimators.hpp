#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "netmix/gibbs.hpp"

namespace netmix {

/// Per-mode posterior edge-inclusion frequencies from an aligned trace.
/// Values are exact sample fractions: value * sample count is an integer.
struct ModeEstimate {
    int num_modes = 0;
    int n = 0;
    std::vector<std::unordered_map<PairKey, double>> edge_prob;
};

struct KSelectionReport {
    struct Entry {
        int num_modes = 0;
        double mean_log_score = 0.0;
        double std_error = 0.0;
        std::int64_t sample_count = 0;
    };
    std::vector<Entry> entries;
    int best_k = 0;
};

enum class SelectScore { joint, likelihood };

struct AlignOptions {
    /// Reference sample for the relabeling: the last kept sample by
    /// default, or the maximum-log-posterior sample.
    bool reference_max_log_posterior = false;
};

/// Undo label switching: permute each sample's mode labels to maximize the
/// contingency overlap of its assignment vector with a reference sample.
/// The permutation is applied consistently to modes, alpha, beta, pi, g.
Trace align_labels(Trace trace, const AlignOptions& options = {});

/// Fraction of kept samples containing each (mode, pair) edge.
ModeEstimate posterior_mean_modes(const Trace& trace);

/// Arithmetic means of alpha, beta, pi, rho; pi renormalized.
Params posterior_mean_params(const Trace& trace);

/// Most frequent label per sample across the trace; ties break toward the
/// smallest mode index.
Assignment map_assignment(const Trace& trace);

struct SelectConfig {
    int sweeps = 1000;
    int burn_in = -1; // negative: sweeps / 5
    int thin = 1;
    std::uint64_t seed = 0;
    int replicates = 1;              // chains per K, seeds derived per (K, replicate)
    SelectScore score = SelectScore::joint;
    bool metric_constrained = false;
    double a_star = 1.0, b_star = 1.0; // rho prior, broadcast to every K
    int max_threads = 0;             // 0: hardware concurrency
};

/// Fit one chain per candidate K (optionally several replicates) and rank
/// the candidates by mean post-burn-in log score.
KSelectionReport select_k(const Population& pop, int k_min, int k_max,
                          const SelectConfig& cfg);

} // namespace netmix
