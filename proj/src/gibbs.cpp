#include "netmix/gibbs.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "netmix/likelihood.hpp"
#include "netmix/metric_model.hpp"
#include "netmix/pair_sampling.hpp"

namespace netmix {

namespace {

inline double logit(double p) {
    p = clamp_rate(p);
    return std::log(p) - std::log1p(-p);
}

inline double sigmoid(double s) {
    if (s >= 0.0)
        return 1.0 / (1.0 + std::exp(-s));
    const double e = std::exp(s);
    return e / (1.0 + e);
}

/// Per-mode coefficients of log R_tu = base + M_t * per_sample_edge +
/// y11 * per_agreement; derived from the agreement identities so the
/// assignment step needs only y11.
struct AssignmentCoeffs {
    std::vector<double> base, per_sample_edge, per_agreement;
};

AssignmentCoeffs assignment_coeffs(const Params& params,
                                   const std::vector<std::int64_t>& mode_edges,
                                   std::int64_t pairs) {
    const int k = params.num_modes();
    AssignmentCoeffs c;
    c.base.resize(k);
    c.per_sample_edge.resize(k);
    c.per_agreement.resize(k);
    for (int u = 0; u < k; ++u) {
        const double la = std::log(clamp_rate(params.alpha[u]));
        const double l1a = std::log(clamp_rate(1.0 - params.alpha[u]));
        const double lb = std::log(clamp_rate(params.beta[u]));
        const double l1b = std::log(clamp_rate(1.0 - params.beta[u]));
        c.base[u] = std::log(clamp_rate(params.pi[u])) +
                    static_cast<double>(mode_edges[u]) * (l1a - l1b) +
                    static_cast<double>(pairs) * l1b;
        c.per_sample_edge[u] = lb - l1b;
        c.per_agreement[u] = la - l1a - lb + l1b;
    }
    return c;
}

} // namespace

ChainConfig ChainConfig::normalized() const {
    ChainConfig cfg = *this;
    if (cfg.num_modes < 1)
        throw validation_error("ChainConfig: num_modes must be >= 1");
    if (cfg.sweeps < 1)
        throw validation_error("ChainConfig: sweeps must be >= 1");
    if (cfg.burn_in < 0)
        cfg.burn_in = cfg.sweeps / 5;
    if (cfg.burn_in >= cfg.sweeps)
        throw validation_error("ChainConfig: burn_in must be smaller than sweeps");
    if (cfg.thin < 1)
        throw validation_error("ChainConfig: thin must be >= 1");
    if (cfg.hyper.num_modes() == 0)
        cfg.hyper = Hyperparams::flat(cfg.num_modes);
    if (cfg.hyper.num_modes() != cfg.num_modes)
        throw validation_error("ChainConfig: hyperparameter length differs from num_modes");
    cfg.hyper.validate();
    return cfg;
}

double edge_inclusion_prob(std::int64_t x, std::int64_t n_u, const Params& params, int u) {
    if (x < 0 || x > n_u)
        throw validation_error("edge_inclusion_prob: need 0 <= x <= n_u");
    const double a = clamp_rate(params.alpha[u]);
    const double b = clamp_rate(params.beta[u]);
    const double s = logit(params.rho) +
                     static_cast<double>(x) * (std::log(a) - std::log(b)) +
                     static_cast<double>(n_u - x) * (std::log1p(-a) - std::log1p(-b));
    return sigmoid(s);
}

std::vector<Graph> sample_modes(const SuffStats& stats, const Params& params, Rng& rng,
                                ModeUpdateCounters* counters) {
    std::vector<Graph> modes;
    modes.reserve(stats.num_modes);
    std::vector<std::pair<int, PairKey>> observed; // (count, pair), reused per cluster

    for (int u = 0; u < stats.num_modes; ++u) {
        Graph mode(stats.n);
        const auto& occ = stats.occurrence[u];
        observed.assign(occ.size(), {});
        std::size_t idx = 0;
        for (const auto& [key, count] : occ)
            observed[idx++] = {count, key};
        std::sort(observed.begin(), observed.end());

        const std::int64_t n_u = stats.cluster_sizes[u];
        // Groups of equal occurrence count share one inclusion probability.
        std::size_t lo = 0;
        while (lo < observed.size()) {
            std::size_t hi = lo;
            const int count = observed[lo].first;
            while (hi < observed.size() && observed[hi].first == count)
                ++hi;
            const std::int64_t group_size = static_cast<std::int64_t>(hi - lo);
            const double q = edge_inclusion_prob(count, n_u, params, u);
            const std::int64_t picks = rng.binomial(group_size, q);
            for (std::int64_t i = 0; i < picks; ++i) {
                const std::size_t j =
                    lo + i + rng.next_below(static_cast<std::uint64_t>(group_size - i));
                std::swap(observed[lo + i], observed[j]);
                mode.add_edge_key(observed[lo + i].second);
            }
            if (counters) {
                ++counters->groups;
                counters->edges_drawn += static_cast<std::uint64_t>(picks);
            }
            lo = hi;
        }

        // Never-observed pairs: the set is implicit, only its size matters
        // for the binomial; chosen edges are rejection-sampled.
        const std::int64_t zero_pool = stats.pairs - static_cast<std::int64_t>(occ.size());
        if (zero_pool > 0) {
            const double q0 = edge_inclusion_prob(0, n_u, params, u);
            const std::int64_t picks = rng.binomial(zero_pool, q0);
            auto excluded = [&](PairKey key) {
                return occ.count(key) != 0 || mode.has_edge_key(key);
            };
            std::uint64_t rejections = 0;
            for (const PairKey key :
                 sample_excluded_pairs(stats.n, zero_pool, picks, excluded, rng, &rejections))
                mode.add_edge_key(key);
            if (counters) {
                ++counters->groups;
                counters->edges_drawn += static_cast<std::uint64_t>(picks);
                counters->rejections += rejections;
            }
        }
        modes.push_back(std::move(mode));
    }
    return modes;
}

std::vector<double> assignment_probabilities(const Population& pop,
                                             const std::vector<Graph>& modes,
                                             const Params& params) {
    const int k = static_cast<int>(modes.size());
    if (params.num_modes() != k || k == 0)
        throw validation_error("assignment_probabilities: mode count mismatch");
    std::vector<std::int64_t> mode_edges(k);
    for (int u = 0; u < k; ++u) {
        if (modes[u].node_count() != pop.n)
            throw validation_error("assignment_probabilities: node count mismatch");
        mode_edges[u] = modes[u].edge_count();
    }
    const AssignmentCoeffs coeffs = assignment_coeffs(params, mode_edges, pair_count(pop.n));

    std::vector<double> probs(static_cast<std::size_t>(pop.size()) * k);
    std::vector<double> logs(k);
    for (int t = 0; t < pop.size(); ++t) {
        const Graph& sample = pop.graphs[t];
        const double m_t = static_cast<double>(sample.edge_count());
        for (int u = 0; u < k; ++u) {
            const auto y11 = static_cast<double>(edge_intersection_count(sample, modes[u]));
            logs[u] = coeffs.base[u] + m_t * coeffs.per_sample_edge[u] +
                      y11 * coeffs.per_agreement[u];
        }
        double max_log = logs[0];
        for (const double l : logs)
            max_log = std::max(max_log, l);
        double total = 0.0;
        for (int u = 0; u < k; ++u) {
            logs[u] = std::exp(logs[u] - max_log);
            total += logs[u];
        }
        for (int u = 0; u < k; ++u)
            probs[static_cast<std::size_t>(t) * k + u] = logs[u] / total;
    }
    return probs;
}

Assignment sample_assignment_conditional(const Population& pop,
                                         const std::vector<Graph>& modes,
                                         const Params& params, Rng& rng) {
    const std::vector<double> probs = assignment_probabilities(pop, modes, params);
    const int k = static_cast<int>(modes.size());
    std::vector<int> labels(static_cast<std::size_t>(pop.size()));
    for (int t = 0; t < pop.size(); ++t) {
        const double u = rng.next_double();
        double cum = 0.0;
        int label = k - 1;
        for (int v = 0; v + 1 < k; ++v) {
            cum += probs[static_cast<std::size_t>(t) * k + v];
            if (u < cum) {
                label = v;
                break;
            }
        }
        labels[t] = label;
    }
    return Assignment(k, std::move(labels));
}

Params sample_params_conditional(const SuffStats& stats, const Hyperparams& hyper,
                                 Rng& rng) {
    const int k = stats.num_modes;
    if (hyper.num_modes() != k)
        throw validation_error("sample_params_conditional: hyperparameter count mismatch");
    Params params;
    params.alpha.resize(k);
    params.beta.resize(k);
    params.pi.resize(k);
    for (int u = 0; u < k; ++u) {
        params.alpha[u] = rng.beta(static_cast<double>(stats.w11[u]) + hyper.h11[u],
                                   static_cast<double>(stats.w01[u]) + hyper.h01[u]);
        params.beta[u] = rng.beta(static_cast<double>(stats.w10[u]) + hyper.h10[u],
                                  static_cast<double>(stats.w00[u]) + hyper.h00[u]);
    }
    const double mode_slots = static_cast<double>(k) * static_cast<double>(stats.pairs);
    params.rho = rng.beta(static_cast<double>(stats.total_mode_edges) + hyper.a_star,
                          mode_slots - static_cast<double>(stats.total_mode_edges) +
                              hyper.b_star);
    std::vector<double> conc(k);
    for (int u = 0; u < k; ++u)
        conc[u] = static_cast<double>(stats.cluster_sizes[u]) + hyper.gamma[u];
    rng.dirichlet(conc, params.pi);
    params.clamp();
    return params;
}

ChainState make_initial_state(const Population& pop, const ChainConfig& raw_cfg) {
    const ChainConfig cfg = raw_cfg.normalized();
    if (pop.size() < 1)
        throw validation_error("make_initial_state: population must be nonempty");
    const int k = cfg.num_modes;
    Rng rng(cfg.seed);

    std::vector<int> labels(static_cast<std::size_t>(pop.size()));
    for (auto& label : labels)
        label = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k)));
    Assignment g(k, std::move(labels));

    Params params;
    params.alpha.resize(k);
    params.beta.resize(k);
    params.pi.resize(k);
    for (int u = 0; u < k; ++u) {
        params.alpha[u] = rng.beta(cfg.hyper.h11[u], cfg.hyper.h01[u]);
        params.beta[u] = rng.beta(cfg.hyper.h10[u], cfg.hyper.h00[u]);
    }
    params.rho = rng.beta(cfg.hyper.a_star, cfg.hyper.b_star);
    rng.dirichlet(cfg.hyper.gamma, params.pi);
    params.clamp();

    std::vector<Graph> empty_modes(static_cast<std::size_t>(k), Graph(pop.n));
    SuffStats stats = build_suff_stats(pop, g, empty_modes);
    std::vector<Graph> modes = sample_modes(stats, params, rng);
    update_stats_on_mode_change(stats, pop, g, modes);

    return ChainState{std::move(modes), std::move(g), std::move(params), std::move(stats),
                      rng};
}

void sweep(ChainState& state, const Population& pop, const ChainConfig& cfg,
           SweepDiagnostics* diag) {
    using clock = std::chrono::steady_clock;

    const auto mode_start = clock::now();
    state.modes = sample_modes(state.stats, state.params, state.rng,
                               diag ? &diag->counters : nullptr);
    update_stats_on_mode_change(state.stats, pop, state.g, state.modes);
    if (diag)
        diag->mode_update_seconds =
            std::chrono::duration<double>(clock::now() - mode_start).count();

    const AssignmentCoeffs coeffs =
        assignment_coeffs(state.params, state.stats.mode_edges, state.stats.pairs);
    const int k = state.stats.num_modes;
    std::vector<double> logs(k);
    for (int t = 0; t < pop.size(); ++t) {
        const double m_t = static_cast<double>(state.stats.sample_edges[t]);
        for (int u = 0; u < k; ++u)
            logs[u] = coeffs.base[u] + m_t * coeffs.per_sample_edge[u] +
                      static_cast<double>(state.stats.y11_at(t, u)) * coeffs.per_agreement[u];
        const int u_new = state.rng.categorical_from_logs(logs);
        update_stats_on_reassign(state.stats, pop, state.g, t, u_new);
    }

    state.params = cfg.metric_constrained
                       ? sample_params_metric(state.stats, cfg.hyper, state.rng)
                       : sample_params_conditional(state.stats, cfg.hyper, state.rng);
}

Trace run_chain(const Population& pop, const ChainConfig& raw_cfg) {
    const ChainConfig cfg = raw_cfg.normalized();
    ChainState state = make_initial_state(pop, cfg);

    Trace trace;
    trace.config = cfg;
    trace.n = pop.n;
    trace.population_size = pop.size();
    trace.diagnostics.resize(static_cast<std::size_t>(cfg.sweeps));
    const int kept = (cfg.sweeps - cfg.burn_in) / cfg.thin;
    trace.samples.reserve(static_cast<std::size_t>(std::max(kept, 0)));

    for (int s = 1; s <= cfg.sweeps; ++s) {
        sweep(state, pop, cfg, &trace.diagnostics[static_cast<std::size_t>(s - 1)]);
        if (s > cfg.burn_in && (s - cfg.burn_in) % cfg.thin == 0) {
            TraceSample sample;
            sample.sweep_index = s;
            sample.log_posterior =
                log_posterior_from_stats(state.stats, state.params, cfg.hyper);
            sample.log_likelihood = log_likelihood_complete(state.stats, state.params);
            sample.modes = state.modes;
            sample.g = state.g;
            sample.params = state.params;
            trace.samples.push_back(std::move(sample));
        }
    }
    return trace;
}

} // namespace netmix
