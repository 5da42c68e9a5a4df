#pragma once

#include <vector>

namespace netmix {

/// Permutation sigma (row -> column) minimizing sum_i cost[i][sigma[i]]
/// over a square cost matrix. Exhaustive search up to 8 rows, Hungarian
/// algorithm (O(K^3)) above that.
std::vector<int> min_cost_permutation(const std::vector<std::vector<double>>& cost);

/// Permutation maximizing the summed score; same search strategy.
std::vector<int> max_score_permutation(const std::vector<std::vector<double>>& score);

} // namespace netmix
