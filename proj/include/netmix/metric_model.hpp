#pragma once

#include "netmix/graph.hpp"
#include "netmix/model.hpp"
#include "netmix/rng.hpp"
#include "netmix/suffstats.hpp"

namespace netmix {

/// Dispersion of the exponential-Hamming graph metric model equivalent to
/// a measurement model with alpha = 1 - beta. Finite only for beta < 1/2.
double sigma_from_beta(double beta);

/// Inverse map: beta = 1 / (1 + e^(1/sigma)), in (0, 1/2).
double beta_from_sigma(double sigma);

/// Log-likelihood of one sample under the exponential-Hamming metric model:
/// exp(-d_H/sigma) normalized over all graphs on n nodes.
double log_likelihood_metric(const Graph& sample, const Graph& mode, double sigma);

/// Constrained params step: one error rate per cluster, alpha_u = 1 - beta_u
/// exactly; the four agreement exponents merge into a single beta draw.
/// Mixture weights and rho are sampled as in the unconstrained case.
Params sample_params_metric(const SuffStats& stats, const Hyperparams& hyper, Rng& rng);

} // namespace netmix
