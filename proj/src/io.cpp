#include "netmix/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace netmix {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

/// Line-by-line tokenizer that keeps the position for error messages.
class LineReader {
public:
    LineReader(std::istream& in, std::string name) : in_(in), name_(std::move(name)) {}

    bool next(std::string& line) {
        if (!std::getline(in_, line))
            return false;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        ++line_no_;
        return true;
    }

    std::string require(const char* what) {
        std::string line;
        if (!next(line))
            fail(std::string("unexpected end of file, expected ") + what);
        return line;
    }

    void expect_eof() {
        std::string line;
        while (next(line))
            if (!line.empty())
                fail("trailing content");
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw validation_error(name_ + ":" + std::to_string(line_no_) + ": " + message);
    }

private:
    std::istream& in_;
    std::string name_;
    int line_no_ = 0;
};

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok)
        tokens.push_back(tok);
    return tokens;
}

long long parse_int(const std::string& tok, LineReader& reader) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        reader.fail("expected integer, got '" + tok + "'");
    }
    if (pos != tok.size())
        reader.fail("expected integer, got '" + tok + "'");
    return value;
}

double parse_double(const std::string& tok, LineReader& reader) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end != begin + tok.size() || tok.empty())
        reader.fail("expected number, got '" + tok + "'");
    return value;
}

void read_edge_block(LineReader& reader, Graph& graph, long long edge_count) {
    for (long long e = 0; e < edge_count; ++e) {
        const auto toks = tokens_of(reader.require("an edge line"));
        if (toks.size() != 2)
            reader.fail("expected 'i j'");
        const long long i = parse_int(toks[0], reader);
        const long long j = parse_int(toks[1], reader);
        if (i < 0 || j < 0 || i >= graph.node_count() || j >= graph.node_count())
            reader.fail("node index out of range");
        if (i >= j)
            reader.fail("pair must satisfy i < j");
        if (!graph.add_edge(static_cast<int>(i), static_cast<int>(j)))
            reader.fail("duplicate edge");
    }
}

void write_edge_block(std::ostream& out, const Graph& graph) {
    for (const PairKey key : graph.sorted_edge_keys()) {
        const auto [i, j] = key_pair(key);
        out << i << ' ' << j << '\n';
    }
}

std::vector<double> parse_doubles(const std::vector<std::string>& toks, std::size_t from,
                                  std::size_t count, LineReader& reader) {
    if (toks.size() != from + count)
        reader.fail("wrong number of fields");
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i)
        values[i] = parse_double(toks[from + i], reader);
    return values;
}

void write_vector(std::ostream& out, const char* tag, const std::vector<double>& values) {
    out << tag;
    for (const double v : values)
        out << ' ' << format_double(v);
    out << '\n';
}

std::vector<double> read_tagged_vector(LineReader& reader, const char* tag,
                                       std::size_t count) {
    const auto toks = tokens_of(reader.require(tag));
    if (toks.empty() || toks[0] != tag)
        reader.fail(std::string("expected '") + tag + "' line");
    return parse_doubles(toks, 1, count, reader);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw validation_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw validation_error("cannot open for reading: " + path);
    return in;
}

} // namespace

Population read_population(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_population(in, path);
}

Population read_population(std::istream& in, const std::string& name) {
    LineReader reader(in, name);
    const auto header = tokens_of(reader.require("header 'n N'"));
    if (header.size() != 2)
        reader.fail("expected header 'n N'");
    const long long n = parse_int(header[0], reader);
    const long long count = parse_int(header[1], reader);
    if (n < 1)
        reader.fail("node count must be >= 1");
    if (count < 1)
        reader.fail("sample count must be >= 1");

    std::vector<Graph> graphs;
    graphs.reserve(static_cast<std::size_t>(count));
    for (long long t = 0; t < count; ++t) {
        const auto toks = tokens_of(reader.require("'graph <t> <m>'"));
        if (toks.size() != 3 || toks[0] != "graph")
            reader.fail("expected 'graph <t> <m>'");
        if (parse_int(toks[1], reader) != t)
            reader.fail("graph blocks must appear in order 0..N-1");
        const long long edges = parse_int(toks[2], reader);
        if (edges < 0)
            reader.fail("edge count must be nonnegative");
        Graph graph(static_cast<int>(n));
        read_edge_block(reader, graph, edges);
        graphs.push_back(std::move(graph));
    }
    reader.expect_eof();
    return Population(static_cast<int>(n), std::move(graphs));
}

void write_population(const Population& pop, const std::string& path) {
    std::ofstream out = open_output(path);
    write_population(pop, out);
}

void write_population(const Population& pop, std::ostream& out) {
    if (pop.size() < 1)
        throw validation_error("write_population: population must be nonempty");
    out << pop.n << ' ' << pop.size() << '\n';
    for (int t = 0; t < pop.size(); ++t) {
        out << "graph " << t << ' ' << pop.graphs[t].edge_count() << '\n';
        write_edge_block(out, pop.graphs[t]);
    }
}

namespace {
constexpr const char* kTruthHeader = "netmix truth v1";
constexpr const char* kTraceHeader = "netmix trace v1";
} // namespace

void write_truth(const GroundTruth& truth, const std::string& path) {
    std::ofstream out = open_output(path);
    write_truth(truth, out);
}

void write_truth(const GroundTruth& truth, std::ostream& out) {
    const int k = truth.params.num_modes();
    if (static_cast<int>(truth.modes.size()) != k || truth.g.num_modes != k)
        throw validation_error("write_truth: inconsistent mode counts");
    const int n = truth.modes.empty() ? 0 : truth.modes.front().node_count();
    out << kTruthHeader << '\n';
    out << n << ' ' << k << ' ' << truth.g.size() << '\n';
    out << "assignment";
    for (const int label : truth.g.labels)
        out << ' ' << label;
    out << '\n';
    write_vector(out, "alpha", truth.params.alpha);
    write_vector(out, "beta", truth.params.beta);
    write_vector(out, "pi", truth.params.pi);
    out << "rho " << format_double(truth.params.rho) << '\n';
    for (int u = 0; u < k; ++u) {
        out << "mode " << u << ' ' << truth.modes[u].edge_count() << '\n';
        write_edge_block(out, truth.modes[u]);
    }
}

GroundTruth read_truth(const std::string& path) {
    std::ifstream in = open_input(path);
    GroundTruth truth;
    read_truth(in, path, truth);
    return truth;
}

void read_truth(std::istream& in, const std::string& name, GroundTruth& out) {
    LineReader reader(in, name);
    if (reader.require("header") != kTruthHeader)
        reader.fail(std::string("expected '") + kTruthHeader + "'");
    const auto dims = tokens_of(reader.require("'n K N'"));
    if (dims.size() != 3)
        reader.fail("expected 'n K N'");
    const long long n = parse_int(dims[0], reader);
    const long long k = parse_int(dims[1], reader);
    const long long count = parse_int(dims[2], reader);
    if (n < 1 || k < 1 || count < 1)
        reader.fail("dimensions must be positive");

    const auto assign_toks = tokens_of(reader.require("assignment line"));
    if (assign_toks.size() != static_cast<std::size_t>(count) + 1 ||
        assign_toks[0] != "assignment")
        reader.fail("expected 'assignment g_0 ... g_{N-1}'");
    std::vector<int> labels(static_cast<std::size_t>(count));
    for (long long t = 0; t < count; ++t) {
        const long long label = parse_int(assign_toks[static_cast<std::size_t>(t) + 1], reader);
        if (label < 0 || label >= k)
            reader.fail("assignment label out of range");
        labels[static_cast<std::size_t>(t)] = static_cast<int>(label);
    }

    Params params;
    params.alpha = read_tagged_vector(reader, "alpha", static_cast<std::size_t>(k));
    params.beta = read_tagged_vector(reader, "beta", static_cast<std::size_t>(k));
    params.pi = read_tagged_vector(reader, "pi", static_cast<std::size_t>(k));
    const auto rho_toks = tokens_of(reader.require("rho line"));
    if (rho_toks.size() != 2 || rho_toks[0] != "rho")
        reader.fail("expected 'rho <value>'");
    params.rho = parse_double(rho_toks[1], reader);

    std::vector<Graph> modes;
    modes.reserve(static_cast<std::size_t>(k));
    for (long long u = 0; u < k; ++u) {
        const auto toks = tokens_of(reader.require("'mode <u> <m>'"));
        if (toks.size() != 3 || toks[0] != "mode")
            reader.fail("expected 'mode <u> <m>'");
        if (parse_int(toks[1], reader) != u)
            reader.fail("mode blocks must appear in order 0..K-1");
        const long long edges = parse_int(toks[2], reader);
        Graph mode(static_cast<int>(n));
        read_edge_block(reader, mode, edges);
        modes.push_back(std::move(mode));
    }
    reader.expect_eof();
    out.g = Assignment(static_cast<int>(k), std::move(labels));
    out.params = std::move(params);
    out.modes = std::move(modes);
}

void write_trace(const Trace& trace, const std::string& path) {
    std::ofstream out = open_output(path);
    write_trace(trace, out);
}

void write_trace(const Trace& trace, std::ostream& out) {
    const ChainConfig& cfg = trace.config;
    const int k = cfg.num_modes;
    out << kTraceHeader << '\n';
    out << "config n " << trace.n << " N " << trace.population_size << " k " << k
        << " sweeps " << cfg.sweeps << " burnin " << cfg.burn_in << " thin " << cfg.thin
        << " seed " << cfg.seed << " metric " << (cfg.metric_constrained ? 1 : 0) << '\n';
    out << "hyper";
    auto put = [&](const std::vector<double>& v) {
        for (const double x : v)
            out << ' ' << format_double(x);
    };
    put(cfg.hyper.h11);
    put(cfg.hyper.h01);
    put(cfg.hyper.h10);
    put(cfg.hyper.h00);
    out << ' ' << format_double(cfg.hyper.a_star) << ' ' << format_double(cfg.hyper.b_star);
    put(cfg.hyper.gamma);
    out << '\n';
    out << "samples " << trace.samples.size() << '\n';

    for (const TraceSample& sample : trace.samples) {
        out << "sample " << sample.sweep_index << ' ' << format_double(sample.log_posterior)
            << ' ' << format_double(sample.log_likelihood) << '\n';
        out << "g";
        for (const int label : sample.g.labels)
            out << ' ' << label;
        out << '\n';
        write_vector(out, "alpha", sample.params.alpha);
        write_vector(out, "beta", sample.params.beta);
        write_vector(out, "pi", sample.params.pi);
        out << "rho " << format_double(sample.params.rho) << '\n';
        for (int u = 0; u < k; ++u) {
            out << "mode " << u << ' ' << sample.modes[u].edge_count();
            for (const PairKey key : sample.modes[u].sorted_edge_keys()) {
                const auto [i, j] = key_pair(key);
                out << ' ' << i << ' ' << j;
            }
            out << '\n';
        }
    }
}

Trace read_trace(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_trace(in, path);
}

Trace read_trace(std::istream& in, const std::string& name) {
    LineReader reader(in, name);
    if (reader.require("header") != kTraceHeader)
        reader.fail(std::string("expected '") + kTraceHeader +
                    "' (unsupported version or not a trace file)");

    Trace trace;
    const auto cfg_toks = tokens_of(reader.require("config line"));
    if (cfg_toks.size() != 17 || cfg_toks[0] != "config")
        reader.fail("malformed config line");
    std::unordered_map<std::string, std::string> fields;
    for (std::size_t i = 1; i + 1 < cfg_toks.size(); i += 2)
        fields[cfg_toks[i]] = cfg_toks[i + 1];
    for (const char* key : {"n", "N", "k", "sweeps", "burnin", "thin", "seed", "metric"})
        if (fields.find(key) == fields.end())
            reader.fail(std::string("config line missing '") + key + "'");
    trace.n = static_cast<int>(parse_int(fields["n"], reader));
    trace.population_size = static_cast<int>(parse_int(fields["N"], reader));
    ChainConfig& cfg = trace.config;
    cfg.num_modes = static_cast<int>(parse_int(fields["k"], reader));
    cfg.sweeps = static_cast<int>(parse_int(fields["sweeps"], reader));
    cfg.burn_in = static_cast<int>(parse_int(fields["burnin"], reader));
    cfg.thin = static_cast<int>(parse_int(fields["thin"], reader));
    cfg.seed = static_cast<std::uint64_t>(std::stoull(fields["seed"]));
    cfg.metric_constrained = parse_int(fields["metric"], reader) != 0;
    const int k = cfg.num_modes;
    if (k < 1 || trace.n < 1)
        reader.fail("config dimensions must be positive");

    const auto hyper_toks = tokens_of(reader.require("hyper line"));
    if (hyper_toks.size() != 1 + 5 * static_cast<std::size_t>(k) + 2 ||
        hyper_toks[0] != "hyper")
        reader.fail("malformed hyper line");
    std::size_t pos = 1;
    auto take = [&](std::vector<double>& v, std::size_t count) {
        v.resize(count);
        for (auto& x : v)
            x = parse_double(hyper_toks[pos++], reader);
    };
    take(cfg.hyper.h11, static_cast<std::size_t>(k));
    take(cfg.hyper.h01, static_cast<std::size_t>(k));
    take(cfg.hyper.h10, static_cast<std::size_t>(k));
    take(cfg.hyper.h00, static_cast<std::size_t>(k));
    cfg.hyper.a_star = parse_double(hyper_toks[pos++], reader);
    cfg.hyper.b_star = parse_double(hyper_toks[pos++], reader);
    take(cfg.hyper.gamma, static_cast<std::size_t>(k));

    const auto count_toks = tokens_of(reader.require("samples line"));
    if (count_toks.size() != 2 || count_toks[0] != "samples")
        reader.fail("expected 'samples <count>'");
    const long long sample_count = parse_int(count_toks[1], reader);
    if (sample_count < 0)
        reader.fail("sample count must be nonnegative");
    trace.samples.reserve(static_cast<std::size_t>(sample_count));

    for (long long s = 0; s < sample_count; ++s) {
        TraceSample sample;
        const auto head = tokens_of(reader.require("sample line"));
        if (head.size() != 4 || head[0] != "sample")
            reader.fail("expected 'sample <sweep> <logpost> <loglik>'");
        sample.sweep_index = static_cast<int>(parse_int(head[1], reader));
        sample.log_posterior = parse_double(head[2], reader);
        sample.log_likelihood = parse_double(head[3], reader);

        const auto g_toks = tokens_of(reader.require("g line"));
        if (g_toks.size() != static_cast<std::size_t>(trace.population_size) + 1 ||
            g_toks[0] != "g")
            reader.fail("malformed g line");
        std::vector<int> labels(static_cast<std::size_t>(trace.population_size));
        for (int t = 0; t < trace.population_size; ++t) {
            const long long label = parse_int(g_toks[static_cast<std::size_t>(t) + 1], reader);
            if (label < 0 || label >= k)
                reader.fail("label out of range");
            labels[static_cast<std::size_t>(t)] = static_cast<int>(label);
        }
        sample.g = Assignment(k, std::move(labels));

        sample.params.alpha = read_tagged_vector(reader, "alpha", static_cast<std::size_t>(k));
        sample.params.beta = read_tagged_vector(reader, "beta", static_cast<std::size_t>(k));
        sample.params.pi = read_tagged_vector(reader, "pi", static_cast<std::size_t>(k));
        const auto rho_toks = tokens_of(reader.require("rho line"));
        if (rho_toks.size() != 2 || rho_toks[0] != "rho")
            reader.fail("expected 'rho <value>'");
        sample.params.rho = parse_double(rho_toks[1], reader);

        sample.modes.reserve(static_cast<std::size_t>(k));
        for (int u = 0; u < k; ++u) {
            const auto toks = tokens_of(reader.require("mode line"));
            if (toks.size() < 3 || toks[0] != "mode")
                reader.fail("expected 'mode <u> <m> i j ...'");
            if (parse_int(toks[1], reader) != u)
                reader.fail("mode lines must appear in order 0..K-1");
            const long long edges = parse_int(toks[2], reader);
            if (toks.size() != 3 + 2 * static_cast<std::size_t>(edges))
                reader.fail("edge list length disagrees with edge count");
            Graph mode(trace.n);
            for (long long e = 0; e < edges; ++e) {
                const long long i = parse_int(toks[3 + 2 * static_cast<std::size_t>(e)], reader);
                const long long j = parse_int(toks[4 + 2 * static_cast<std::size_t>(e)], reader);
                if (i < 0 || j < 0 || i >= trace.n || j >= trace.n || i >= j)
                    reader.fail("bad edge in mode line");
                if (!mode.add_edge(static_cast<int>(i), static_cast<int>(j)))
                    reader.fail("duplicate edge in mode line");
            }
            sample.modes.push_back(std::move(mode));
        }
        trace.samples.push_back(std::move(sample));
    }
    reader.expect_eof();
    return trace;
}

Population ingest_daily_snapshots(const std::string& directory,
                                  const std::string& registry_path) {
    std::unordered_map<std::string, int> node_index;
    {
        std::ifstream in = open_input(registry_path);
        LineReader reader(in, registry_path);
        std::string line;
        while (reader.next(line)) {
            const auto toks = tokens_of(line);
            if (toks.empty())
                continue;
            if (toks.size() != 1)
                reader.fail("expected one node id per line");
            if (!node_index.emplace(toks[0], static_cast<int>(node_index.size())).second)
                reader.fail("duplicate node id '" + toks[0] + "'");
        }
    }
    if (node_index.empty())
        throw validation_error(registry_path + ": registry is empty");
    const int n = static_cast<int>(node_index.size());

    std::vector<fs::path> day_files;
    if (!fs::is_directory(directory))
        throw validation_error(directory + ": not a directory");
    for (const auto& entry : fs::directory_iterator(directory))
        if (entry.is_regular_file())
            day_files.push_back(entry.path());
    if (day_files.empty())
        throw validation_error(directory + ": no snapshot files");
    std::sort(day_files.begin(), day_files.end());

    std::vector<Graph> graphs;
    graphs.reserve(day_files.size());
    for (const fs::path& path : day_files) {
        std::ifstream in = open_input(path.string());
        LineReader reader(in, path.string());
        Graph graph(n);
        std::string line;
        while (reader.next(line)) {
            const auto toks = tokens_of(line);
            if (toks.empty())
                continue;
            if (toks.size() != 2)
                reader.fail("expected 'id1 id2'");
            const auto a = node_index.find(toks[0]);
            const auto b = node_index.find(toks[1]);
            if (a == node_index.end())
                reader.fail("unknown node id '" + toks[0] + "'");
            if (b == node_index.end())
                reader.fail("unknown node id '" + toks[1] + "'");
            if (a->second == b->second)
                reader.fail("self-contact '" + toks[0] + "'");
            graph.add_edge(a->second, b->second); // repeats collapse
        }
        graphs.push_back(std::move(graph));
    }
    return Population(n, std::move(graphs));
}

void write_estimate_dir(const EstimateOutput& est, const std::string& dir) {
    fs::create_directories(dir);
    const int k = est.modes.num_modes;

    json params_doc;
    params_doc["format"] = "netmix estimate v1";
    params_doc["n"] = est.modes.n;
    params_doc["k"] = k;
    params_doc["trace_samples"] = est.trace_samples;
    params_doc["metric"] = est.metric;
    params_doc["alpha"] = est.params.alpha;
    params_doc["beta"] = est.params.beta;
    params_doc["pi"] = est.params.pi;
    params_doc["rho"] = est.params.rho;
    if (est.metric) {
        // Dispersion of the equivalent exponential-Hamming model; null when
        // the posterior mean beta leaves its domain.
        json sigma = json::array();
        for (const double b : est.params.beta) {
            if (b > 0.0 && b < 0.5)
                sigma.push_back(1.0 / (std::log1p(-b) - std::log(b)));
            else
                sigma.push_back(nullptr);
        }
        params_doc["sigma"] = sigma;
    }
    open_output((fs::path(dir) / "params.json").string()) << params_doc.dump(2) << '\n';

    for (int u = 0; u < k; ++u) {
        std::ofstream out =
            open_output((fs::path(dir) / ("mode_" + std::to_string(u) + ".csv")).string());
        out << "i,j,probability\n";
        std::map<PairKey, double> sorted(est.modes.edge_prob[u].begin(),
                                         est.modes.edge_prob[u].end());
        for (const auto& [key, p] : sorted) {
            const auto [i, j] = key_pair(key);
            out << i << ',' << j << ',' << format_double(p) << '\n';
        }
    }

    std::ofstream out = open_output((fs::path(dir) / "assignment.csv").string());
    out << "t,mode\n";
    for (int t = 0; t < est.map.size(); ++t)
        out << t << ',' << est.map.labels[t] << '\n';
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ','))
        fields.push_back(field);
    return fields;
}

} // namespace

EstimateOutput read_estimate_dir(const std::string& dir) {
    EstimateOutput est;
    json params_doc;
    {
        std::ifstream in = open_input((fs::path(dir) / "params.json").string());
        try {
            in >> params_doc;
        } catch (const json::exception& e) {
            throw validation_error(dir + "/params.json: " + e.what());
        }
    }
    try {
        if (params_doc.at("format").get<std::string>() != "netmix estimate v1")
            throw validation_error(dir + "/params.json: unsupported format version");
        est.modes.n = params_doc.at("n").get<int>();
        est.modes.num_modes = params_doc.at("k").get<int>();
        est.trace_samples = params_doc.at("trace_samples").get<std::int64_t>();
        est.metric = params_doc.at("metric").get<bool>();
        est.params.alpha = params_doc.at("alpha").get<std::vector<double>>();
        est.params.beta = params_doc.at("beta").get<std::vector<double>>();
        est.params.pi = params_doc.at("pi").get<std::vector<double>>();
        est.params.rho = params_doc.at("rho").get<double>();
    } catch (const json::exception& e) {
        throw validation_error(dir + "/params.json: " + e.what());
    }
    const int k = est.modes.num_modes;
    if (k < 1 || est.params.num_modes() != k)
        throw validation_error(dir + "/params.json: inconsistent mode count");

    est.modes.edge_prob.assign(k, {});
    for (int u = 0; u < k; ++u) {
        const std::string path = (fs::path(dir) / ("mode_" + std::to_string(u) + ".csv")).string();
        std::ifstream in = open_input(path);
        LineReader reader(in, path);
        if (reader.require("header") != "i,j,probability")
            reader.fail("expected header 'i,j,probability'");
        std::string line;
        while (reader.next(line)) {
            if (line.empty())
                continue;
            const auto fields = split_csv(line);
            if (fields.size() != 3)
                reader.fail("expected 'i,j,probability'");
            const long long i = parse_int(fields[0], reader);
            const long long j = parse_int(fields[1], reader);
            if (i < 0 || j < 0 || i >= est.modes.n || j >= est.modes.n || i >= j)
                reader.fail("bad pair");
            est.modes.edge_prob[u][pair_key(static_cast<int>(i), static_cast<int>(j))] =
                parse_double(fields[2], reader);
        }
    }

    const std::string path = (fs::path(dir) / "assignment.csv").string();
    std::ifstream in = open_input(path);
    LineReader reader(in, path);
    if (reader.require("header") != "t,mode")
        reader.fail("expected header 't,mode'");
    std::vector<int> labels;
    std::string line;
    while (reader.next(line)) {
        if (line.empty())
            continue;
        const auto fields = split_csv(line);
        if (fields.size() != 2)
            reader.fail("expected 't,mode'");
        if (parse_int(fields[0], reader) != static_cast<long long>(labels.size()))
            reader.fail("rows must be ordered by t");
        const long long label = parse_int(fields[1], reader);
        if (label < 0 || label >= k)
            reader.fail("mode label out of range");
        labels.push_back(static_cast<int>(label));
    }
    if (labels.empty())
        reader.fail("no assignment rows");
    est.map = Assignment(k, std::move(labels));
    return est;
}

} // namespace netmix
