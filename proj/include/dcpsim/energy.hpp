#pragma once

#include "dcpsim/config.hpp"
#include "dcpsim/topology.hpp"
#include "dcpsim/types.hpp"

namespace dcpsim {

// Energy to transmit one message over distance d (meters), in Joules.
double tx_energy(const RadioModel& model, double dist);

// Energy to receive one message, in Joules.
double rx_energy(const RadioModel& model);

// Total radio energy for one cluster to deliver a round of messages:
// each member transmits to the head, the head receives each and transmits
// one aggregated message to the base station. Throws ConfigError on an
// unknown cluster id.
double e_total(const RadioModel& model, const ClusterAssignment& assignment,
               const Topology& topology, int cluster_id);

// Sum of e_total over all clusters in the assignment.
double e_total_all(const RadioModel& model, const ClusterAssignment& assignment,
                   const Topology& topology);

}  // namespace dcpsim
