#pragma once

#include <vector>

#include "netmix/graph.hpp"
#include "netmix/model.hpp"
#include "netmix/suffstats.hpp"

namespace netmix {

/// Log-likelihood of the data given a complete configuration (assignment,
/// modes, rates), evaluated from the aggregate agreement counts.
double log_likelihood_complete(const SuffStats& stats, const Params& params);

/// Log-likelihood with the assignment marginalized out: per sample, a
/// log-sum-exp over modes of the agreement terms weighted by pi.
double log_likelihood_marginal(const Population& pop, const std::vector<Graph>& modes,
                               const Params& params);

/// Log prior density of the rate/weight parameters under the conjugate
/// beta/Dirichlet priors (all-ones pseudo-counts give the flat priors).
double log_prior_params(const Params& params, const Hyperparams& hyper);

/// Joint log density of (data, assignment, modes, params): complete
/// likelihood + categorical assignment prior + Bernoulli mode prior +
/// parameter prior. Equals the log posterior up to the model evidence.
double log_posterior(const Population& pop, const Assignment& g,
                     const std::vector<Graph>& modes, const Params& params,
                     const Hyperparams& hyper);

/// Same value computed from already-built counts; used inside the sampler.
double log_posterior_from_stats(const SuffStats& stats, const Params& params,
                                const Hyperparams& hyper);

} // namespace netmix
