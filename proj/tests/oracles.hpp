#pragma once

// Test-only reference implementations. Everything here recomputes model
// quantities the slow, literal way (dense pair loops, exhaustive
// enumeration, closed-form integrals) and stays independent of the
// library's incremental/grouped code paths it is used to check.

#include <cstdint>
#include <map>
#include <vector>

#include "netmix/gibbs.hpp"
#include "netmix/graph.hpp"
#include "netmix/model.hpp"
#include "netmix/rng.hpp"
#include "netmix/suffstats.hpp"

namespace netmix::testing {

struct NaiveStats {
    std::vector<int> cluster_sizes;
    std::vector<std::int64_t> sample_edges;
    std::vector<std::int64_t> mode_edges;
    std::int64_t total_mode_edges = 0;
    std::vector<std::map<PairKey, int>> occurrence;
    // Full agreement matrices, [t][u].
    std::vector<std::vector<std::int64_t>> y11, y10, y01, y00;
    std::vector<std::int64_t> w11, w10, w01, w00;
};

/// Dense O(N * K * n^2) recount of every tracked quantity.
NaiveStats naive_stats(const Population& pop, const Assignment& g,
                       const std::vector<Graph>& modes);

/// Complete-data log-likelihood as a literal product over samples, modes,
/// and pairs.
double naive_complete_loglik(const Population& pop, const Assignment& g,
                             const std::vector<Graph>& modes, const Params& params);

/// log P(assignment | params) under the categorical prior.
double naive_assignment_prior(const Assignment& g, const Params& params);

/// Marginal log-likelihood by exhaustive enumeration of all K^N
/// assignments.
double naive_marginal_loglik(const Population& pop, const std::vector<Graph>& modes,
                             const Params& params);

/// Joint log density evaluated term by term (likelihood, assignment prior,
/// mode prior, beta/Dirichlet parameter densities via lgamma).
double naive_log_posterior(const Population& pop, const Assignment& g,
                           const std::vector<Graph>& modes, const Params& params,
                           const Hyperparams& hyper);

/// Mode draw as C(n,2) independent Bernoulli trials, one per pair.
Graph naive_mode_draw(const SuffStats& stats, const Params& params, int u, Rng& rng);

/// Assignment probabilities straight from the agreement counts and the
/// ratio form of the conditional.
std::vector<double> naive_assignment_probs(const Population& pop,
                                           const std::vector<Graph>& modes,
                                           const Params& params);

/// Exact posterior over all K^N assignments for tiny instances, with the
/// modes summed out configuration by configuration and the rate/weight
/// parameters integrated in closed form (beta-function integrals under
/// the conjugate priors). Feasible for K^N and 2^(K*C(n,2)) small.
std::vector<double> exact_assignment_posterior(const Population& pop, int k,
                                               const Hyperparams& hyper);

/// Upper-tail p-value of a chi-square statistic with `dof` degrees of
/// freedom (regularized incomplete gamma).
double chi_square_p_value(double stat, double dof);

Graph random_graph(int n, double density, Rng& rng);
Population random_population(int n, int count, double density, Rng& rng);
/// Interior parameter values (rates in [0.15, 0.85], pi off the simplex
/// corners) so log terms stay well-conditioned.
Params random_params(int k, Rng& rng);

bool traces_equal(const Trace& a, const Trace& b);

} // namespace netmix::testing
