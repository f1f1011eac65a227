#include "dcpsim/metrics.hpp"

#include <charconv>
#include <stdexcept>

#include "dcpsim/config.hpp"

namespace dcpsim {

double d_b(const Topology& topology) {
    double total = 0.0;
    for (double d : topology.dist_to_bs) total += d;
    return total;
}

double d_c(const ClusterAssignment& assignment, const Topology& topology, int cluster_id) {
    auto it = assignment.clusters.find(cluster_id);
    if (it == assignment.clusters.end()) {
        throw ConfigError("cluster_id: unknown cluster " + std::to_string(cluster_id));
    }
    const Cluster& cluster = it->second;
    double total = 0.0;
    for (int member : cluster.members) {
        total += topology.distance(member - 1, cluster.head - 1);
    }
    return total;
}

double t_dist(const ClusterAssignment& assignment, const Topology& topology) {
    double total = 0.0;
    for (const auto& [id, cluster] : assignment.clusters) {
        total += d_c(assignment, topology, id);
        total += topology.dist_to_bs[static_cast<std::size_t>(cluster.head - 1)];
    }
    return total;
}

std::optional<double> mean_delay(
        const std::vector<std::pair<long long, long long>>& deliveries) {
    if (deliveries.empty()) return std::nullopt;
    double total = 0.0;
    for (const auto& [generated, delivered] : deliveries) {
        if (delivered < generated) {
            throw std::logic_error("mean_delay: delivered before generated");
        }
        total += static_cast<double>(delivered - generated + 1);
    }
    return total / static_cast<double>(deliveries.size());
}

RoundRecord record_tick(long long tick, const std::vector<Node>& nodes, int cluster_count,
                        const EnergyLedger& ledger, const DelayStats& delays,
                        double e_total_radio) {
    RoundRecord rec;
    rec.tick = tick;
    rec.cumulative_dissipated = ledger.dissipated;
    rec.cluster_count = cluster_count;
    rec.mean_delay = delays.mean();
    rec.e_total_radio = e_total_radio;

    long long remaining = 0;
    for (const Node& n : nodes) {
        remaining += n.energy;
        if (n.energy > 0) ++rec.alive_count;
    }
    rec.remaining_total = remaining;

    if (rec.cumulative_dissipated + rec.remaining_total != ledger.initial_total) {
        throw std::logic_error("energy conservation violated at tick " + std::to_string(tick));
    }
    return rec;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::logic_error("format_double: to_chars failed");
    return std::string(buf, ptr);
}

void write_runs_csv(std::ostream& out, const std::vector<SimulationResult>& results) {
    out << "tick,protocol,seed,cumulative_dissipated,remaining_total,"
           "alive_count,cluster_count,mean_delay,e_total_radio\n";
    for (const SimulationResult& result : results) {
        for (const RoundRecord& rec : result.records) {
            out << rec.tick << ',' << result.protocol << ',' << result.seed << ','
                << rec.cumulative_dissipated << ',' << rec.remaining_total << ','
                << rec.alive_count << ',' << rec.cluster_count << ',';
            if (rec.mean_delay) out << format_double(*rec.mean_delay);
            out << ',' << format_double(rec.e_total_radio) << '\n';
        }
    }
}

}  // namespace dcpsim
