// Command-line front end: generate synthetic populations, fit chains,
// summarize traces, select K, evaluate against ground truth, export
// distance matrices, and ingest daily snapshot data.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netmix/estimators.hpp"
#include "netmix/generator.hpp"
#include "netmix/gibbs.hpp"
#include "netmix/io.hpp"
#include "netmix/metrics.hpp"

namespace {

using namespace netmix;

constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

Hyperparams load_hyper(const std::string& path, int k) {
    if (path.empty())
        return Hyperparams::flat(k);
    std::ifstream in(path);
    if (!in)
        throw validation_error("cannot open hyperparameter file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(path + ": " + e.what());
    }
    Hyperparams hyper = Hyperparams::flat(k);
    auto fill = [&](const char* key, std::vector<double>& out) {
        if (!doc.contains(key))
            return;
        const auto& value = doc.at(key);
        if (value.is_number()) {
            out.assign(static_cast<std::size_t>(k), value.get<double>());
        } else {
            out = value.get<std::vector<double>>();
            if (static_cast<int>(out.size()) != k)
                throw validation_error(path + ": '" + key + "' must have K entries");
        }
    };
    fill("h11", hyper.h11);
    fill("h01", hyper.h01);
    fill("h10", hyper.h10);
    fill("h00", hyper.h00);
    fill("gamma", hyper.gamma);
    if (doc.contains("a_star"))
        hyper.a_star = doc.at("a_star").get<double>();
    if (doc.contains("b_star"))
        hyper.b_star = doc.at("b_star").get<double>();
    hyper.validate();
    return hyper;
}

int run_generate(int k, int n, int count, std::optional<double> p,
                 std::vector<double> alpha, std::vector<double> beta,
                 std::vector<double> pi, double rho, std::uint64_t seed,
                 const std::string& out_path, const std::string& modes_path) {
    Rng rng(seed);
    std::vector<Graph> modes;
    if (!modes_path.empty()) {
        const Population loaded = read_population(modes_path);
        modes = loaded.graphs;
        k = static_cast<int>(modes.size());
        n = loaded.n;
    } else {
        modes = sample_modes_from_prior(k, n, rho, rng);
    }

    if (pi.empty())
        pi.assign(static_cast<std::size_t>(k), 1.0 / k);
    if (static_cast<int>(pi.size()) != k)
        throw validation_error("--pi must have K entries");

    Params params;
    GroundTruth truth;
    Population pop;
    if (p.has_value()) {
        if (!alpha.empty() || !beta.empty())
            throw validation_error("--p and --alpha/--beta are mutually exclusive");
        BenchmarkConfig cfg;
        cfg.flip_prob = *p;
        cfg.population_size = count;
        cfg.modes = modes;
        cfg.pi = pi;
        cfg.seed = rng.next_u64();
        Benchmark bench = make_benchmark(cfg);
        pop = std::move(bench.pop);
        truth.g = std::move(bench.truth);
        params = std::move(bench.params);
        params.rho = rho;
    } else {
        if (static_cast<int>(alpha.size()) != k || static_cast<int>(beta.size()) != k)
            throw validation_error("--alpha and --beta must have K entries (or use --p)");
        params.alpha = alpha;
        params.beta = beta;
        params.pi = pi;
        params.rho = rho;
        params.validate();
        auto drawn = sample_population(modes, params, count, rng);
        pop = std::move(drawn.first);
        truth.g = std::move(drawn.second);
    }
    truth.params = params;
    truth.modes = std::move(modes);

    write_population(pop, out_path);
    write_truth(truth, out_path + ".truth");
    std::cout << "wrote " << out_path << " (n=" << pop.n << ", N=" << pop.size()
              << ") and " << out_path << ".truth\n";
    return 0;
}

int run_fit(const std::string& in_path, int k, int sweeps, int burn_in, int thin,
            std::uint64_t seed, const std::string& hyper_path, bool metric,
            const std::string& out_path) {
    const Population pop = read_population(in_path);
    ChainConfig cfg;
    cfg.num_modes = k;
    cfg.sweeps = sweeps;
    cfg.burn_in = burn_in;
    cfg.thin = thin;
    cfg.seed = seed;
    cfg.metric_constrained = metric;
    cfg.hyper = load_hyper(hyper_path, k);
    const Trace trace = run_chain(pop, cfg);
    write_trace(trace, out_path);
    std::cout << "wrote " << out_path << " (" << trace.samples.size() << " samples)\n";
    return 0;
}

int run_estimate(const std::string& trace_path, const std::string& out_dir,
                 bool ref_max_lp) {
    Trace trace = read_trace(trace_path);
    AlignOptions options;
    options.reference_max_log_posterior = ref_max_lp;
    trace = align_labels(std::move(trace), options);

    EstimateOutput est;
    est.modes = posterior_mean_modes(trace);
    est.params = posterior_mean_params(trace);
    est.map = map_assignment(trace);
    est.trace_samples = static_cast<std::int64_t>(trace.samples.size());
    est.metric = trace.config.metric_constrained;
    write_estimate_dir(est, out_dir);
    std::cout << "wrote estimates to " << out_dir << "\n";
    return 0;
}

int run_select(const std::string& in_path, int k_min, int k_max, int sweeps, int burn_in,
               int thin, int replicates, std::uint64_t seed, const std::string& score,
               double a_star, double b_star, int threads, const std::string& out_path) {
    const Population pop = read_population(in_path);
    SelectConfig cfg;
    cfg.sweeps = sweeps;
    cfg.burn_in = burn_in;
    cfg.thin = thin;
    cfg.seed = seed;
    cfg.replicates = replicates;
    cfg.a_star = a_star;
    cfg.b_star = b_star;
    cfg.max_threads = threads;
    if (score == "joint")
        cfg.score = SelectScore::joint;
    else if (score == "likelihood")
        cfg.score = SelectScore::likelihood;
    else
        throw validation_error("--score must be 'joint' or 'likelihood'");
    const KSelectionReport report = select_k(pop, k_min, k_max, cfg);

    std::ofstream out(out_path);
    if (!out)
        throw validation_error("cannot open for writing: " + out_path);
    out << "k,mean_log_score,std_error,samples\n";
    for (const auto& entry : report.entries)
        out << entry.num_modes << ',' << format_double(entry.mean_log_score) << ','
            << format_double(entry.std_error) << ',' << entry.sample_count << '\n';
    std::cout << "best k: " << report.best_k << " (wrote " << out_path << ")\n";
    return 0;
}

int run_eval(const std::string& est_dir, const std::string& truth_path,
             const std::string& out_path) {
    const EstimateOutput est = read_estimate_dir(est_dir);
    const GroundTruth truth = read_truth(truth_path);
    if (est.modes.num_modes != truth.params.num_modes())
        throw validation_error("estimate and truth disagree on the number of modes");

    const double vi = variation_of_information(est.map, truth.g);
    const double mode_l1 = mode_set_error(est.modes, truth.modes);
    const std::vector<int> sigma = mode_matching(est.modes, truth.modes);
    const double theta_l1 = param_l1(est.params, truth.params, sigma);

    std::ofstream out(out_path);
    if (!out)
        throw validation_error("cannot open for writing: " + out_path);
    out << "vi_nats,mode_l1,param_l1\n";
    out << format_double(vi) << ',' << format_double(mode_l1) << ','
        << format_double(theta_l1) << '\n';
    std::cout << "vi=" << format_double(vi) << " mode_l1=" << format_double(mode_l1)
              << " param_l1=" << format_double(theta_l1) << " (wrote " << out_path
              << ")\n";
    return 0;
}

int run_dist(const std::string& in_path, const std::string& out_path) {
    const Population pop = read_population(in_path);
    const auto dist = pairwise_hamming(pop);
    std::ofstream out(out_path);
    if (!out)
        throw validation_error("cannot open for writing: " + out_path);
    for (const auto& row : dist) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? "," : "") << row[j];
        out << '\n';
    }
    std::cout << "wrote " << out_path << " (" << dist.size() << "x" << dist.size()
              << ")\n";
    return 0;
}

int run_ingest(const std::string& dir, const std::string& registry,
               const std::string& out_path) {
    const Population pop = ingest_daily_snapshots(dir, registry);
    write_population(pop, out_path);
    std::cout << "wrote " << out_path << " (n=" << pop.n << ", N=" << pop.size() << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clustering and denoising of heterogeneous network populations"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Sample a synthetic population");
    int gen_k = 2, gen_n = 8, gen_count = 100;
    std::optional<double> gen_p;
    std::vector<double> gen_alpha, gen_beta, gen_pi;
    double gen_rho = 0.25;
    std::uint64_t gen_seed = 0;
    std::string gen_out, gen_modes;
    gen->add_option("--k", gen_k, "Number of modes")->check(CLI::PositiveNumber);
    gen->add_option("--n", gen_n, "Number of nodes")->check(CLI::PositiveNumber);
    gen->add_option("--N", gen_count, "Number of samples")->check(CLI::PositiveNumber);
    gen->add_option("--p", gen_p, "Flip probability (sets alpha=1-p, beta=p)");
    gen->add_option("--alpha", gen_alpha, "Per-mode true-positive rates")->delimiter(',');
    gen->add_option("--beta", gen_beta, "Per-mode false-positive rates")->delimiter(',');
    gen->add_option("--pi", gen_pi, "Mixture weights (default uniform)")->delimiter(',');
    gen->add_option("--rho", gen_rho, "Edge density for prior-drawn modes");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--out", gen_out, "Output population file")->required();
    gen->add_option("--modes", gen_modes, "Read modes from this population-format file");

    // fit
    auto* fit = app.add_subcommand("fit", "Run the Gibbs sampler on a population");
    std::string fit_in, fit_hyper, fit_out;
    int fit_k = 1, fit_sweeps = 1000, fit_burnin = -1, fit_thin = 1;
    std::uint64_t fit_seed = 0;
    bool fit_metric = false;
    fit->add_option("--in", fit_in, "Input population file")->required();
    fit->add_option("--k", fit_k, "Number of modes")->required()->check(CLI::PositiveNumber);
    fit->add_option("--sweeps", fit_sweeps, "Total Gibbs sweeps")->check(CLI::PositiveNumber);
    fit->add_option("--burnin", fit_burnin, "Discarded sweeps (default sweeps/5)");
    fit->add_option("--thin", fit_thin, "Keep every thin-th sweep");
    fit->add_option("--seed", fit_seed, "RNG seed");
    fit->add_option("--hyper", fit_hyper, "JSON hyperparameter file");
    fit->add_flag("--metric", fit_metric, "Constrain alpha = 1 - beta (metric model)");
    fit->add_option("--out", fit_out, "Output trace file")->required();

    // estimate
    auto* est = app.add_subcommand("estimate", "Point estimates from a trace");
    std::string est_trace, est_out;
    bool est_maxlp = false;
    est->add_option("--trace", est_trace, "Input trace file")->required();
    est->add_option("--out", est_out, "Output directory")->required();
    est->add_flag("--align-max-logpost", est_maxlp,
                  "Align labels to the maximum-log-posterior sample instead of the last");

    // select
    auto* sel = app.add_subcommand("select", "Score candidate numbers of modes");
    std::string sel_in, sel_out, sel_score = "joint";
    int sel_kmin = 1, sel_kmax = 4, sel_sweeps = 1000, sel_burnin = -1, sel_thin = 1;
    int sel_seeds = 1, sel_threads = 0;
    std::uint64_t sel_seed = 0;
    double sel_astar = 1.0, sel_bstar = 1.0;
    sel->add_option("--in", sel_in, "Input population file")->required();
    sel->add_option("--kmin", sel_kmin, "Smallest K")->check(CLI::PositiveNumber);
    sel->add_option("--kmax", sel_kmax, "Largest K")->check(CLI::PositiveNumber);
    sel->add_option("--sweeps", sel_sweeps, "Sweeps per chain")->check(CLI::PositiveNumber);
    sel->add_option("--burnin", sel_burnin, "Discarded sweeps (default sweeps/5)");
    sel->add_option("--thin", sel_thin, "Keep every thin-th sweep");
    sel->add_option("--seeds", sel_seeds, "Replicate chains per K")->check(CLI::PositiveNumber);
    sel->add_option("--seed", sel_seed, "Base RNG seed");
    sel->add_option("--score", sel_score, "Ranking score: joint|likelihood");
    sel->add_option("--astar", sel_astar, "rho-prior pseudo-count a*");
    sel->add_option("--bstar", sel_bstar, "rho-prior pseudo-count b*");
    sel->add_option("--threads", sel_threads, "Max concurrent chains (0: auto)");
    sel->add_option("--out", sel_out, "Output CSV")->required();

    // eval
    auto* ev = app.add_subcommand("eval", "Compare estimates against ground truth");
    std::string ev_est, ev_truth, ev_out;
    ev->add_option("--est", ev_est, "Estimate directory")->required();
    ev->add_option("--truth", ev_truth, "Ground-truth sidecar file")->required();
    ev->add_option("--out", ev_out, "Output CSV")->required();

    // dist
    auto* di = app.add_subcommand("dist", "Pairwise Hamming distance matrix");
    std::string di_in, di_out;
    di->add_option("--in", di_in, "Input population file")->required();
    di->add_option("--out", di_out, "Output CSV")->required();

    // ingest
    auto* ing = app.add_subcommand("ingest", "Build a population from daily edge lists");
    std::string ing_dir, ing_registry, ing_out;
    ing->add_option("--dir", ing_dir, "Directory of per-day edge lists")->required();
    ing->add_option("--registry", ing_registry, "Node registry file")->required();
    ing->add_option("--out", ing_out, "Output population file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (gen->parsed())
            return run_generate(gen_k, gen_n, gen_count, gen_p, gen_alpha, gen_beta,
                                gen_pi, gen_rho, gen_seed, gen_out, gen_modes);
        if (fit->parsed())
            return run_fit(fit_in, fit_k, fit_sweeps, fit_burnin, fit_thin, fit_seed,
                           fit_hyper, fit_metric, fit_out);
        if (est->parsed())
            return run_estimate(est_trace, est_out, est_maxlp);
        if (sel->parsed())
            return run_select(sel_in, sel_kmin, sel_kmax, sel_sweeps, sel_burnin, sel_thin,
                              sel_seeds, sel_seed, sel_score, sel_astar, sel_bstar,
                              sel_threads, sel_out);
        if (ev->parsed())
            return run_eval(ev_est, ev_truth, ev_out);
        if (di->parsed())
            return run_dist(di_in, di_out);
        if (ing->parsed())
            return run_ingest(ing_dir, ing_registry, ing_out);
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return 0;
}
