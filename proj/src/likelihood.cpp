#include "netmix/likelihood.hpp"

#include <cmath>

namespace netmix {

namespace {

inline double safe_log(double x) { return std::log(clamp_rate(x)); }

inline double log_sum_exp(const std::vector<double>& v) {
    double m = v[0];
    for (const double x : v)
        m = std::max(m, x);
    double s = 0.0;
    for (const double x : v)
        s += std::exp(x - m);
    return m + std::log(s);
}

double log_beta_fn(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

} // namespace

double log_likelihood_complete(const SuffStats& stats, const Params& params) {
    if (params.num_modes() != stats.num_modes)
        throw validation_error("log_likelihood_complete: mode count mismatch");
    double total = 0.0;
    for (int u = 0; u < stats.num_modes; ++u) {
        total += static_cast<double>(stats.w11[u]) * safe_log(params.alpha[u]) +
                 static_cast<double>(stats.w01[u]) * safe_log(1.0 - params.alpha[u]) +
                 static_cast<double>(stats.w10[u]) * safe_log(params.beta[u]) +
                 static_cast<double>(stats.w00[u]) * safe_log(1.0 - params.beta[u]);
    }
    return total;
}

double log_likelihood_marginal(const Population& pop, const std::vector<Graph>& modes,
                               const Params& params) {
    const int k = static_cast<int>(modes.size());
    if (params.num_modes() != k || k == 0)
        throw validation_error("log_likelihood_marginal: mode count mismatch");
    for (const Graph& m : modes)
        if (m.node_count() != pop.n)
            throw validation_error("log_likelihood_marginal: node count mismatch");

    const std::int64_t pairs = pair_count(pop.n);
    std::vector<double> log_pi(k), log_a(k), log_1a(k), log_b(k), log_1b(k);
    std::vector<std::int64_t> mode_edges(k);
    for (int u = 0; u < k; ++u) {
        log_pi[u] = safe_log(params.pi[u]);
        log_a[u] = safe_log(params.alpha[u]);
        log_1a[u] = safe_log(1.0 - params.alpha[u]);
        log_b[u] = safe_log(params.beta[u]);
        log_1b[u] = safe_log(1.0 - params.beta[u]);
        mode_edges[u] = modes[u].edge_count();
    }

    double total = 0.0;
    std::vector<double> terms(k);
    for (const Graph& sample : pop.graphs) {
        const std::int64_t m_t = sample.edge_count();
        for (int u = 0; u < k; ++u) {
            const std::int64_t y11 = edge_intersection_count(sample, modes[u]);
            const std::int64_t y10 = m_t - y11;
            const std::int64_t y01 = mode_edges[u] - y11;
            const std::int64_t y00 = pairs - y10 - y01 - y11;
            terms[u] = log_pi[u] + static_cast<double>(y11) * log_a[u] +
                       static_cast<double>(y01) * log_1a[u] +
                       static_cast<double>(y10) * log_b[u] +
                       static_cast<double>(y00) * log_1b[u];
        }
        total += log_sum_exp(terms);
    }
    return total;
}

double log_prior_params(const Params& params, const Hyperparams& hyper) {
    const int k = params.num_modes();
    if (hyper.num_modes() != k)
        throw validation_error("log_prior_params: mode count mismatch");
    double total = 0.0;
    for (int u = 0; u < k; ++u) {
        total += (hyper.h11[u] - 1.0) * safe_log(params.alpha[u]) +
                 (hyper.h01[u] - 1.0) * safe_log(1.0 - params.alpha[u]) -
                 log_beta_fn(hyper.h11[u], hyper.h01[u]);
        total += (hyper.h10[u] - 1.0) * safe_log(params.beta[u]) +
                 (hyper.h00[u] - 1.0) * safe_log(1.0 - params.beta[u]) -
                 log_beta_fn(hyper.h10[u], hyper.h00[u]);
    }
    total += (hyper.a_star - 1.0) * safe_log(params.rho) +
             (hyper.b_star - 1.0) * safe_log(1.0 - params.rho) -
             log_beta_fn(hyper.a_star, hyper.b_star);
    double gamma_sum = 0.0;
    for (int u = 0; u < k; ++u) {
        total += (hyper.gamma[u] - 1.0) * safe_log(params.pi[u]) - std::lgamma(hyper.gamma[u]);
        gamma_sum += hyper.gamma[u];
    }
    total += std::lgamma(gamma_sum);
    return total;
}

double log_posterior_from_stats(const SuffStats& stats, const Params& params,
                                const Hyperparams& hyper) {
    double total = log_likelihood_complete(stats, params);
    for (int u = 0; u < stats.num_modes; ++u)
        total += static_cast<double>(stats.cluster_sizes[u]) * safe_log(params.pi[u]);
    const double mode_slots = static_cast<double>(stats.num_modes) *
                              static_cast<double>(stats.pairs);
    total += static_cast<double>(stats.total_mode_edges) * safe_log(params.rho) +
             (mode_slots - static_cast<double>(stats.total_mode_edges)) *
                 safe_log(1.0 - params.rho);
    total += log_prior_params(params, hyper);
    return total;
}

double log_posterior(const Population& pop, const Assignment& g,
                     const std::vector<Graph>& modes, const Params& params,
                     const Hyperparams& hyper) {
    const SuffStats stats = build_suff_stats(pop, g, modes);
    return log_posterior_from_stats(stats, params, hyper);
}

} // namespace netmix
