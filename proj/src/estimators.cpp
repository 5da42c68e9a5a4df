#include "netmix/estimators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "netmix/matching.hpp"

namespace netmix {

namespace {

/// sigma[u] = new label of old label u, chosen to maximize the contingency
/// overlap between `labels` (relabeled) and `reference`.
std::vector<int> overlap_permutation(const std::vector<int>& labels,
                                     const std::vector<int>& reference, int k) {
    std::vector<std::vector<double>> overlap(k, std::vector<double>(k, 0.0));
    for (std::size_t t = 0; t < labels.size(); ++t)
        overlap[labels[t]][reference[t]] += 1.0;
    return max_score_permutation(overlap);
}

void apply_permutation(TraceSample& sample, const std::vector<int>& sigma) {
    const int k = sample.g.num_modes;
    std::vector<Graph> modes(k);
    Params params = sample.params;
    for (int u = 0; u < k; ++u) {
        modes[sigma[u]] = std::move(sample.modes[u]);
        params.alpha[sigma[u]] = sample.params.alpha[u];
        params.beta[sigma[u]] = sample.params.beta[u];
        params.pi[sigma[u]] = sample.params.pi[u];
    }
    sample.modes = std::move(modes);
    sample.params = std::move(params);
    for (int& label : sample.g.labels)
        label = sigma[label];
}

bool is_identity(const std::vector<int>& sigma) {
    for (std::size_t i = 0; i < sigma.size(); ++i)
        if (sigma[i] != static_cast<int>(i))
            return false;
    return true;
}

} // namespace

Trace align_labels(Trace trace, const AlignOptions& options) {
    if (trace.samples.empty())
        throw validation_error("align_labels: empty trace");
    std::size_t ref_index = trace.samples.size() - 1;
    if (options.reference_max_log_posterior) {
        for (std::size_t s = 0; s < trace.samples.size(); ++s)
            if (trace.samples[s].log_posterior > trace.samples[ref_index].log_posterior)
                ref_index = s;
    }
    const std::vector<int> reference = trace.samples[ref_index].g.labels;
    const int k = trace.samples[ref_index].g.num_modes;
    for (TraceSample& sample : trace.samples) {
        const std::vector<int> sigma = overlap_permutation(sample.g.labels, reference, k);
        if (!is_identity(sigma))
            apply_permutation(sample, sigma);
    }
    return trace;
}

ModeEstimate posterior_mean_modes(const Trace& trace) {
    if (trace.samples.empty())
        throw validation_error("posterior_mean_modes: empty trace");
    const int k = trace.config.num_modes;
    ModeEstimate est;
    est.num_modes = k;
    est.n = trace.n;
    est.edge_prob.assign(k, {});
    for (const TraceSample& sample : trace.samples)
        for (int u = 0; u < k; ++u)
            for (const PairKey key : sample.modes[u].edge_keys())
                est.edge_prob[u][key] += 1.0;
    const double denom = static_cast<double>(trace.samples.size());
    for (auto& mode : est.edge_prob)
        for (auto& [key, value] : mode)
            value /= denom;
    return est;
}

Params posterior_mean_params(const Trace& trace) {
    if (trace.samples.empty())
        throw validation_error("posterior_mean_params: empty trace");
    const int k = trace.config.num_modes;
    Params mean;
    mean.alpha.assign(k, 0.0);
    mean.beta.assign(k, 0.0);
    mean.pi.assign(k, 0.0);
    mean.rho = 0.0;
    for (const TraceSample& sample : trace.samples) {
        for (int u = 0; u < k; ++u) {
            mean.alpha[u] += sample.params.alpha[u];
            mean.beta[u] += sample.params.beta[u];
            mean.pi[u] += sample.params.pi[u];
        }
        mean.rho += sample.params.rho;
    }
    const double denom = static_cast<double>(trace.samples.size());
    double pi_sum = 0.0;
    for (int u = 0; u < k; ++u) {
        mean.alpha[u] /= denom;
        mean.beta[u] /= denom;
        mean.pi[u] /= denom;
        pi_sum += mean.pi[u];
    }
    for (auto& p : mean.pi)
        p /= pi_sum;
    mean.rho /= denom;
    return mean;
}

Assignment map_assignment(const Trace& trace) {
    if (trace.samples.empty())
        throw validation_error("map_assignment: empty trace");
    const int k = trace.config.num_modes;
    const int count = trace.population_size;
    std::vector<std::int64_t> votes(static_cast<std::size_t>(count) * k, 0);
    for (const TraceSample& sample : trace.samples)
        for (int t = 0; t < count; ++t)
            ++votes[static_cast<std::size_t>(t) * k + sample.g.labels[t]];
    std::vector<int> labels(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
        int best = 0;
        for (int u = 1; u < k; ++u)
            if (votes[static_cast<std::size_t>(t) * k + u] >
                votes[static_cast<std::size_t>(t) * k + best])
                best = u;
        labels[t] = best;
    }
    return Assignment(k, std::move(labels));
}

KSelectionReport select_k(const Population& pop, int k_min, int k_max,
                          const SelectConfig& cfg) {
    if (k_min < 1 || k_min > k_max)
        throw validation_error("select_k: need 1 <= k_min <= k_max");
    if (cfg.replicates < 1)
        throw validation_error("select_k: replicates must be >= 1");

    struct Task {
        int num_modes;
        int replicate;
        double mean = 0.0;
        std::int64_t count = 0;
        double m2 = 0.0; // sum of squared deviations, for per-chain variance
    };
    std::vector<Task> tasks;
    for (int k = k_min; k <= k_max; ++k)
        for (int r = 0; r < cfg.replicates; ++r)
            tasks.push_back(Task{k, r});

    auto run_task = [&](Task& task) {
        ChainConfig chain;
        chain.num_modes = task.num_modes;
        chain.sweeps = cfg.sweeps;
        chain.burn_in = cfg.burn_in;
        chain.thin = cfg.thin;
        chain.metric_constrained = cfg.metric_constrained;
        chain.hyper = Hyperparams::flat(task.num_modes);
        chain.hyper.a_star = cfg.a_star;
        chain.hyper.b_star = cfg.b_star;
        chain.seed = Rng::substream(cfg.seed, static_cast<std::uint64_t>(task.num_modes),
                                    static_cast<std::uint64_t>(task.replicate))
                         .next_u64();
        const Trace trace = run_chain(pop, chain);
        for (const TraceSample& sample : trace.samples) {
            const double value = cfg.score == SelectScore::joint ? sample.log_posterior
                                                                 : sample.log_likelihood;
            ++task.count;
            const double delta = value - task.mean;
            task.mean += delta / static_cast<double>(task.count);
            task.m2 += delta * (value - task.mean);
        }
    };

    unsigned threads = cfg.max_threads > 0 ? static_cast<unsigned>(cfg.max_threads)
                                           : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, tasks.size()));
    if (threads == 1) {
        for (Task& task : tasks)
            run_task(task);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size())
                        return;
                    run_task(tasks[i]);
                }
            });
        for (auto& t : pool)
            t.join();
    }

    KSelectionReport report;
    for (int k = k_min; k <= k_max; ++k) {
        KSelectionReport::Entry entry;
        entry.num_modes = k;
        std::vector<double> chain_means;
        double pooled_m2 = 0.0;
        for (const Task& task : tasks) {
            if (task.num_modes != k)
                continue;
            const double w = static_cast<double>(task.count);
            const double old_count = static_cast<double>(entry.sample_count);
            if (task.count > 0) {
                const double delta = task.mean - entry.mean_log_score;
                entry.sample_count += task.count;
                entry.mean_log_score += delta * w / static_cast<double>(entry.sample_count);
                pooled_m2 += task.m2 + delta * delta * w * old_count /
                                           static_cast<double>(entry.sample_count);
            }
            chain_means.push_back(task.mean);
        }
        if (chain_means.size() > 1) {
            // Replicates available: spread of the per-chain means.
            double mean_of_means = 0.0;
            for (const double m : chain_means)
                mean_of_means += m;
            mean_of_means /= static_cast<double>(chain_means.size());
            double var = 0.0;
            for (const double m : chain_means)
                var += (m - mean_of_means) * (m - mean_of_means);
            var /= static_cast<double>(chain_means.size() - 1);
            entry.std_error = std::sqrt(var / static_cast<double>(chain_means.size()));
        } else if (entry.sample_count > 1) {
            // Single chain: naive i.i.d. standard error of the sample mean.
            const double var =
                pooled_m2 / static_cast<double>(entry.sample_count - 1);
            entry.std_error = std::sqrt(var / static_cast<double>(entry.sample_count));
        }
        report.entries.push_back(entry);
    }
    report.best_k = report.entries.front().num_modes;
    double best = report.entries.front().mean_log_score;
    for (const auto& entry : report.entries)
        if (entry.mean_log_score > best) {
            best = entry.mean_log_score;
            report.best_k = entry.num_modes;
        }
    return report;
}

} // namespace netmix
