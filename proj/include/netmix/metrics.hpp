#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "netmix/estimators.hpp"
#include "netmix/graph.hpp"
#include "netmix/model.hpp"

namespace netmix {

/// Variation of information between two labelings, in nats:
/// H(g1) + H(g2) - 2 I(g1; g2), zero iff they induce the same partition.
double variation_of_information(const Assignment& g1, const Assignment& g2);

/// Permutation matching estimated modes to ground-truth modes, minimizing
/// the summed l1 distance; sigma[u] = truth index for estimate mode u.
std::vector<int> mode_matching(const ModeEstimate& est, const std::vector<Graph>& truth);

/// Minimum over mode permutations of the total l1 distance between the
/// soft edge-probability estimates and the binary truth.
double mode_set_error(const ModeEstimate& est, const std::vector<Graph>& truth);

/// Sum of |difference| over all alpha, beta, pi entries. The permuted
/// overload compares estimate mode u against truth mode perm[u].
double param_l1(const Params& est, const Params& truth);
double param_l1(const Params& est, const Params& truth, std::span<const int> perm);

/// Symmetric N x N matrix of pairwise Hamming distances (edge-set
/// symmetric differences) between population samples.
std::vector<std::vector<std::int64_t>> pairwise_hamming(const Population& pop);

} // namespace netmix
