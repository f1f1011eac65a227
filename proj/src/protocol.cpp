#include "dcpsim/protocol.hpp"

#include "dcpsim/energy.hpp"

namespace dcpsim {

namespace {

// Protocol RNG stream, kept distinct from the placement stream.
std::mt19937_64 protocol_rng(std::uint64_t seed) {
    return std::mt19937_64(seed ^ 0xD1B54A32D192ED03ULL);
}

std::vector<Node> initial_nodes(const SimConfig& config) {
    std::vector<Node> nodes(static_cast<std::size_t>(config.node_count));
    long long units = config.initial_units();
    for (int i = 0; i < config.node_count; ++i) {
        nodes[static_cast<std::size_t>(i)] = Node{i + 1, units, 0, false, false};
    }
    return nodes;
}

}  // namespace

std::optional<int> energy_max(const std::vector<Node>& nodes) {
    std::optional<int> best;
    long long best_energy = 0;
    for (const Node& n : nodes) {
        if (n.cluster_no != 0) continue;
        if (!best || n.energy > best_energy) {  // ties keep the lowest id
            best = n.id;
            best_energy = n.energy;
        }
    }
    return best;
}

void reset_assignment(ProtocolState& state) {
    for (Node& n : state.nodes) {
        n.cluster_no = 0;
        n.ss_flag = false;
        n.active = false;
    }
    state.assignment = ClusterAssignment{};
}

void make_cluster(ProtocolState& state, const Topology& topology, double range) {
    int cluster_id = 0;
    while (auto head_id = energy_max(state.nodes)) {
        ++cluster_id;
        Node& head = state.node(*head_id);
        head.ss_flag = true;
        head.cluster_no = cluster_id;
        state.assignment.subsink.push_back(head.id);

        Cluster cluster{head.id, {}};
        for (Node& n : state.nodes) {
            if (n.cluster_no != 0) continue;
            if (topology.distance(head.id - 1, n.id - 1) <= range) {
                n.cluster_no = cluster_id;
                cluster.members.push_back(n.id);
            }
        }
        state.assignment.clusters.emplace(cluster_id, std::move(cluster));
    }
}

void status_update(ProtocolState& state, std::mt19937_64& rng, double p_active) {
    for (Node& n : state.nodes) {
        if (n.ss_flag || n.energy <= 0) continue;
        n.active = canonical_u01(rng()) < p_active;
    }
}

bool dcp_cycle(ProtocolState& state, Topology& topology, const SimConfig& config,
               std::mt19937_64& rng, EnergyLedger& ledger, DelayStats& delays,
               std::vector<RoundRecord>& records) {
    // Head charging: each head is checked before it pays the cycle cost.
    for (int head_id : state.assignment.subsink) {
        Node& head = state.node(head_id);
        if (head.energy <= 0) {
            state.alive = false;
            return false;
        }
        ledger.charge(head, config.schedule.head_cost_per_cycle);
    }

    double etr = e_total_all(config.radio, state.assignment, topology);
    int cluster_count = static_cast<int>(state.assignment.clusters.size());
    long long cycle_end = state.tick + config.refresh_time;

    for (int t = 0; t < config.refresh_time; ++t) {
        ++state.tick;
        status_update(state, rng, config.p_active);

        long long actives = 0;
        bool dead = false;
        for (Node& n : state.nodes) {
            if (n.ss_flag) continue;
            if (n.energy <= 0) {
                dead = true;
                break;
            }
            if (n.active) {
                ledger.charge(n, config.schedule.active_cost_per_tick);
                n.active = false;
                ++actives;
            } else {
                ledger.charge(n, config.schedule.idle_cost_per_tick);
            }
        }

        // Data generated this tick reaches the BS in the head's end-of-cycle
        // aggregate; under death nothing generated this tick is delivered.
        if (!dead && actives > 0) delays.add(cycle_end - state.tick + 1, actives);

        records.push_back(record_tick(state.tick, state.nodes, cluster_count, ledger,
                                      delays, etr));
        if (dead) {
            state.alive = false;
            return false;
        }
    }

    // Refresh: dissolve and re-form clusters from current residual energies.
    ++state.cycle;
    reset_assignment(state);
    cal_distance(topology);  // positions are static; recomputed each cycle anyway
    make_cluster(state, topology, config.range);
    return true;
}

SimulationResult run_dcp(const SimConfig& config, const Topology& topology) {
    config.validate();

    Topology topo = topology;
    ProtocolState state;
    state.nodes = initial_nodes(config);

    std::mt19937_64 rng = protocol_rng(config.seed);
    EnergyLedger ledger{config.node_count * config.initial_units(), 0};
    DelayStats delays;

    SimulationResult result;
    result.protocol = "dcp";
    result.seed = config.seed;

    make_cluster(state, topo, config.range);
    result.records.push_back(record_tick(0, state.nodes,
                                         static_cast<int>(state.assignment.clusters.size()),
                                         ledger, delays,
                                         e_total_all(config.radio, state.assignment, topo)));

    while (state.alive && (config.horizon == 0 || state.tick < config.horizon)) {
        if (!dcp_cycle(state, topo, config, rng, ledger, delays, result.records)) break;
    }

    result.lifetime = state.tick;
    result.final_nodes = state.nodes;
    return result;
}

}  // namespace dcpsim
