#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dcpsim/config.hpp"
#include "dcpsim/metrics.hpp"

namespace dcpsim {

// A batch is one SimConfig swept over seeds and protocols.
struct BatchSpec {
    SimConfig base;
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    std::vector<Protocol> protocols{Protocol::dcp, Protocol::leach};
};

// Parses the key-value config file (sections [energy] and [leach]); missing
// keys keep their defaults. Throws ConfigError naming the offending key.
BatchSpec parse_config_file(const std::string& path);

// Applies one `key = value` override on top of a parsed spec; the same keys
// the config file accepts. Used by the CLI flag layer.
void apply_override(BatchSpec& spec, const std::string& key, const std::string& value);

// Renders the fully resolved spec back into config-file syntax; parsing the
// output reproduces the spec.
std::string render_config(const BatchSpec& spec);

// Runs every (protocol, seed) pair; output sorted by protocol then seed.
std::vector<SimulationResult> run_batch(const BatchSpec& spec);

// Per-tick median series for one quantity, one column per protocol. A cell
// is absent once every run of that protocol has died.
struct MedianSeries {
    std::vector<long long> ticks;
    std::vector<std::optional<double>> dcp;
    std::vector<std::optional<double>> leach;
};

struct ComparisonReport {
    MedianSeries energy;    // cumulative dissipated units
    MedianSeries lifetime;  // alive node count
    MedianSeries delay;     // running mean delay
    double dcp_median_lifetime = 0;
    double leach_median_lifetime = 0;
    double dcp_final_dissipated = 0;   // median over seeds
    double leach_final_dissipated = 0;
    double dcp_mean_delay = 0;         // median over seeds of final running mean
    double leach_mean_delay = 0;
    bool energy_trend = false;    // DCP dissipates less, gap non-decreasing
    bool lifetime_trend = false;  // DCP lives longer
    bool delay_trend = false;     // DCP delay higher but bounded by refresh_time
    std::string summary;
};

// Requires both protocols on matched seed sets; throws ConfigError otherwise.
ComparisonReport compare_report(const std::vector<SimulationResult>& results,
                                const SimConfig& config);

// Writes runs.csv, fig_energy.csv, fig_lifetime.csv, fig_delay.csv,
// summary.txt and resolved_config.txt into dir. With a null report (single
// protocol batch) only runs.csv and resolved_config.txt are written.
void write_outputs(const std::filesystem::path& dir, const BatchSpec& spec,
                   const std::vector<SimulationResult>& results,
                   const ComparisonReport* report);

}  // namespace dcpsim
