#include "dcpsim/leach.hpp"

#include <algorithm>
#include <cmath>

#include "dcpsim/energy.hpp"
#include "dcpsim/protocol.hpp"

namespace dcpsim {

namespace {

// One-shot election at tick 0: the ceil(p*N) highest-energy nodes become
// heads (ties by lowest id), everyone else attaches to the nearest head with
// no range limit.
ClusterAssignment form_static_clusters(const std::vector<Node>& nodes,
                                       const Topology& topology, double head_fraction) {
    int n = static_cast<int>(nodes.size());
    int head_count = static_cast<int>(
        std::ceil(head_fraction * static_cast<double>(n)));
    head_count = std::clamp(head_count, 1, n);

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return nodes[static_cast<std::size_t>(a - 1)].energy >
               nodes[static_cast<std::size_t>(b - 1)].energy;
    });

    ClusterAssignment assignment;
    for (int c = 0; c < head_count; ++c) {
        int head_id = order[static_cast<std::size_t>(c)];
        assignment.subsink.push_back(head_id);
        assignment.clusters.emplace(c + 1, Cluster{head_id, {}});
    }

    for (int id = 1; id <= n; ++id) {
        if (std::find(assignment.subsink.begin(), assignment.subsink.end(), id) !=
            assignment.subsink.end()) {
            continue;
        }
        int best_cluster = 1;
        double best_dist = topology.distance(id - 1, assignment.clusters.at(1).head - 1);
        for (int c = 2; c <= head_count; ++c) {
            double d = topology.distance(id - 1, assignment.clusters.at(c).head - 1);
            if (d < best_dist) {
                best_dist = d;
                best_cluster = c;
            }
        }
        assignment.clusters.at(best_cluster).members.push_back(id);
    }
    return assignment;
}

}  // namespace

SimulationResult run_leach(const SimConfig& config, const Topology& topology) {
    config.validate();

    ProtocolState state;
    state.nodes.resize(static_cast<std::size_t>(config.node_count));
    long long units = config.initial_units();
    for (int i = 0; i < config.node_count; ++i) {
        state.nodes[static_cast<std::size_t>(i)] = Node{i + 1, units, 0, false, false};
    }

    state.assignment = form_static_clusters(state.nodes, topology, config.leach.head_fraction);
    for (const auto& [cid, cluster] : state.assignment.clusters) {
        state.node(cluster.head).ss_flag = true;
        state.node(cluster.head).cluster_no = cid;
        for (int member : cluster.members) state.node(member).cluster_no = cid;
    }

    EnergyLedger ledger{config.node_count * units, 0};
    DelayStats delays;
    int cluster_count = static_cast<int>(state.assignment.clusters.size());
    double etr = e_total_all(config.radio, state.assignment, topology);

    SimulationResult result;
    result.protocol = "leach";
    result.seed = config.seed;
    result.records.push_back(record_tick(0, state.nodes, cluster_count, ledger, delays, etr));

    while (state.alive && (config.horizon == 0 || state.tick < config.horizon)) {
        // Head charging at the start of every refresh window, same rule as DCP.
        for (int head_id : state.assignment.subsink) {
            Node& head = state.node(head_id);
            if (head.energy <= 0) {
                state.alive = false;
                break;
            }
            ledger.charge(head, config.schedule.head_cost_per_cycle);
        }
        if (!state.alive) break;

        for (int t = 0; t < config.refresh_time && state.alive; ++t) {
            ++state.tick;
            long long forwarded = 0;
            bool dead = false;
            for (Node& n : state.nodes) {
                if (n.ss_flag) continue;
                if (n.energy <= 0) {
                    dead = true;
                    break;
                }
                // No sleep/wait: every member transmits every tick and the
                // head forwards immediately, so per-datum delay is 1 tick.
                ledger.charge(n, config.schedule.active_cost_per_tick);
                ++forwarded;
            }
            if (!dead && forwarded > 0) delays.add(1, forwarded);
            result.records.push_back(
                record_tick(state.tick, state.nodes, cluster_count, ledger, delays, etr));
            if (dead) state.alive = false;
        }
    }

    result.lifetime = state.tick;
    result.final_nodes = state.nodes;
    return result;
}

}  // namespace dcpsim
