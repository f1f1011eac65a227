#pragma once

#include "dcpsim/config.hpp"
#include "dcpsim/metrics.hpp"
#include "dcpsim/topology.hpp"

namespace dcpsim {

// LEACH baseline with static clusters: ceil(head_fraction * N) heads elected
// once at tick 0, every other node attached to its nearest head, no
// re-clustering and no sleep/wait. Non-heads pay the active rate every tick;
// heads pay the per-cycle head cost every refresh_time ticks. Death rule and
// record stream match run_dcp.
SimulationResult run_leach(const SimConfig& config, const Topology& topology);

}  // namespace dcpsim
