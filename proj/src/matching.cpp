#include "netmix/matching.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "netmix/errors.hpp"

namespace netmix {

namespace {

std::vector<int> exhaustive_min(const std::vector<std::vector<double>>& cost) {
    const int k = static_cast<int>(cost.size());
    std::vector<int> perm(k), best(k);
    std::iota(perm.begin(), perm.end(), 0);
    best = perm;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
        double c = 0.0;
        for (int i = 0; i < k; ++i)
            c += cost[i][perm[i]];
        if (c < best_cost) {
            best_cost = c;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<int> hungarian_min(const std::vector<std::vector<double>>& cost) {
    const int n = static_cast<int>(cost.size());
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> match(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<double> min_col(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const int i0 = match[j0];
            int j1 = -1;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j])
                    continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < min_col[j]) {
                    min_col[j] = cur;
                    way[j] = j0;
                }
                if (min_col[j] < delta) {
                    delta = min_col[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_col[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> result(n);
    for (int j = 1; j <= n; ++j)
        if (match[j] != 0)
            result[match[j] - 1] = j - 1;
    return result;
}

void check_square(const std::vector<std::vector<double>>& m) {
    if (m.empty())
        throw validation_error("permutation matching: empty matrix");
    for (const auto& row : m)
        if (row.size() != m.size())
            throw validation_error("permutation matching: matrix must be square");
}

} // namespace

std::vector<int> min_cost_permutation(const std::vector<std::vector<double>>& cost) {
    check_square(cost);
    if (cost.size() <= 8)
        return exhaustive_min(cost);
    return hungarian_min(cost);
}

std::vector<int> max_score_permutation(const std::vector<std::vector<double>>& score) {
    check_square(score);
    std::vector<std::vector<double>> cost(score.size());
    for (std::size_t i = 0; i < score.size(); ++i) {
        cost[i].resize(score.size());
        for (std::size_t j = 0; j < score.size(); ++j)
            cost[i][j] = -score[i][j];
    }
    return min_cost_permutation(cost);
}

} // namespace netmix
