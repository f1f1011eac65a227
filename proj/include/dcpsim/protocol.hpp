#pragma once

#include <optional>
#include <random>
#include <vector>

#include "dcpsim/config.hpp"
#include "dcpsim/metrics.hpp"
#include "dcpsim/topology.hpp"
#include "dcpsim/types.hpp"

namespace dcpsim {

struct ProtocolState {
    std::vector<Node> nodes;
    ClusterAssignment assignment;
    long long tick = 0;
    int cycle = 0;
    bool alive = true;

    Node& node(int id) { return nodes[static_cast<std::size_t>(id) - 1]; }
    const Node& node(int id) const { return nodes[static_cast<std::size_t>(id) - 1]; }
};

// Id of the maximum-energy node among those with cluster_no == 0; ties go to
// the lowest id. Empty when every node is assigned.
std::optional<int> energy_max(const std::vector<Node>& nodes);

// Clears cluster ids, head flags, and activity flags.
void reset_assignment(ProtocolState& state);

// Greedy cluster formation: repeatedly elect the unassigned node of maximum
// energy as a head and sweep every still-unassigned node within `range` of
// it into the new cluster, until all nodes are assigned.
void make_cluster(ProtocolState& state, const Topology& topology, double range);

// Marks each non-head node with positive energy active with probability
// p_active; heads are never touched.
void status_update(ProtocolState& state, std::mt19937_64& rng, double p_active);

// One refresh cycle: head charging, refresh_time ticks of member activity
// (one RoundRecord appended per tick), then re-clustering. Returns false on
// network death; state.tick is then the death tick.
bool dcp_cycle(ProtocolState& state, Topology& topology, const SimConfig& config,
               std::mt19937_64& rng, EnergyLedger& ledger, DelayStats& delays,
               std::vector<RoundRecord>& records);

// Full DCP run: initialize, form clusters, cycle until network death or the
// configured horizon.
SimulationResult run_dcp(const SimConfig& config, const Topology& topology);

}  // namespace dcpsim
