#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "netmix/estimators.hpp"
#include "netmix/gibbs.hpp"
#include "netmix/graph.hpp"
#include "netmix/model.hpp"

namespace netmix {

/// Shortest text form that strtod parses back to the same double.
std::string format_double(double value);

/// Population text format:
///   line 1: "n N"
///   then per sample t = 0..N-1: "graph <t> <m_t>" followed by m_t lines
///   "i j" with 0 <= i < j < n, unique within the block.
/// Violations are reported with their line number.
Population read_population(const std::string& path);
Population read_population(std::istream& in, const std::string& name);
void write_population(const Population& pop, const std::string& path);
void write_population(const Population& pop, std::ostream& out);

/// Generating configuration emitted next to synthetic populations so that
/// evaluation never needs hidden state.
struct GroundTruth {
    Assignment g;
    Params params;
    std::vector<Graph> modes;
};

GroundTruth read_truth(const std::string& path);
void read_truth(std::istream& in, const std::string& name, GroundTruth& out);
void write_truth(const GroundTruth& truth, const std::string& path);
void write_truth(const GroundTruth& truth, std::ostream& out);

/// Versioned line-oriented trace format; re-reading reproduces the
/// in-memory trace exactly (numbers carry 17 significant digits).
/// Per-sweep diagnostics are not serialized.
Trace read_trace(const std::string& path);
Trace read_trace(std::istream& in, const std::string& name);
void write_trace(const Trace& trace, const std::string& path);
void write_trace(const Trace& trace, std::ostream& out);

/// One network per day file (sorted by filename) from a directory of
/// edge lists "id1 id2", with node ids resolved through a registry file
/// listing one id per line. Repeated contacts within a day collapse to a
/// single edge.
Population ingest_daily_snapshots(const std::string& directory,
                                  const std::string& registry_path);

/// What `estimate` writes: per-mode edge-probability CSVs, params JSON,
/// MAP assignment CSV.
struct EstimateOutput {
    ModeEstimate modes;
    Params params;
    Assignment map;
    std::int64_t trace_samples = 0;
    bool metric = false;
};

void write_estimate_dir(const EstimateOutput& est, const std::string& dir);
EstimateOutput read_estimate_dir(const std::string& dir);

} // namespace netmix
