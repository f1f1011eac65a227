#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dcpsim/topology.hpp"
#include "dcpsim/types.hpp"

namespace dcpsim {

// Per-tick metrics row.
struct RoundRecord {
    long long tick = 0;
    long long cumulative_dissipated = 0;
    long long remaining_total = 0;
    int alive_count = 0;
    int cluster_count = 0;
    std::optional<double> mean_delay;  // absent until the first datum is delivered
    double e_total_radio = 0.0;
};

struct SimulationResult {
    std::vector<RoundRecord> records;
    long long lifetime = 0;  // tick of network death, or the horizon if survived
    std::string protocol;
    std::uint64_t seed = 0;
    std::vector<Node> final_nodes;
};

// Integer energy ledger; charge() keeps dissipated + remaining constant.
struct EnergyLedger {
    long long initial_total = 0;
    long long dissipated = 0;

    void charge(Node& node, long long amount) {
        node.energy -= amount;
        dissipated += amount;
    }
};

// Running mean of delivery delays (ticks from generation to BS delivery,
// inclusive on both ends).
struct DelayStats {
    long long count = 0;
    long long total = 0;

    void add(long long delay, long long n = 1) {
        count += n;
        total += delay * n;
    }
    std::optional<double> mean() const {
        if (count == 0) return std::nullopt;
        return static_cast<double>(total) / static_cast<double>(count);
    }
};

// Sum of node-to-BS distances over all nodes.
double d_b(const Topology& topology);

// Sum of member-to-head distances within one cluster. Throws ConfigError on
// an unknown cluster id.
double d_c(const ClusterAssignment& assignment, const Topology& topology, int cluster_id);

// Total path length over all clusters: member-to-head legs plus one
// head-to-BS leg per cluster.
double t_dist(const ClusterAssignment& assignment, const Topology& topology);

// Mean of (delivered - generated + 1) over the deliveries; absent when empty.
std::optional<double> mean_delay(const std::vector<std::pair<long long, long long>>& deliveries);

// Builds the RoundRecord for the given node snapshot and ledger. Enforces
// the conservation identity dissipated + remaining == initial_total; a
// violation throws std::logic_error (a defect, not an input error).
RoundRecord record_tick(long long tick, const std::vector<Node>& nodes, int cluster_count,
                        const EnergyLedger& ledger, const DelayStats& delays,
                        double e_total_radio);

// Shortest round-trip decimal rendering of a double.
std::string format_double(double v);

// Writes all records with the header
// tick,protocol,seed,cumulative_dissipated,remaining_total,alive_count,cluster_count,mean_delay,e_total_radio
void write_runs_csv(std::ostream& out, const std::vector<SimulationResult>& results);

}  // namespace dcpsim
