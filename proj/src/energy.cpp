#include "dcpsim/energy.hpp"

namespace dcpsim {

double tx_energy(const RadioModel& model, double dist) {
    double bits = static_cast<double>(model.message_bits);
    return model.e_elec * bits + model.e_amp * bits * dist * dist;
}

double rx_energy(const RadioModel& model) {
    return model.e_elec * static_cast<double>(model.message_bits);
}

double e_total(const RadioModel& model, const ClusterAssignment& assignment,
               const Topology& topology, int cluster_id) {
    auto it = assignment.clusters.find(cluster_id);
    if (it == assignment.clusters.end()) {
        throw ConfigError("cluster_id: unknown cluster " + std::to_string(cluster_id));
    }
    const Cluster& cluster = it->second;
    int head = cluster.head - 1;

    double total = 0.0;
    for (int member : cluster.members) {
        total += tx_energy(model, topology.distance(member - 1, head));
        total += rx_energy(model);
    }
    // One aggregated head-to-BS transmission per cluster.
    total += tx_energy(model, topology.dist_to_bs[static_cast<std::size_t>(head)]);
    return total;
}

double e_total_all(const RadioModel& model, const ClusterAssignment& assignment,
                   const Topology& topology) {
    double total = 0.0;
    for (const auto& [id, cluster] : assignment.clusters) {
        (void)cluster;
        total += e_total(model, assignment, topology, id);
    }
    return total;
}

}  // namespace dcpsim
