#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcpsim/config.hpp"
#include "dcpsim/types.hpp"

namespace dcpsim {

// Node placements plus the all-pairs distance matrix and base station.
// Immutable after construction; safe to share read-only across runs.
struct Topology {
    std::vector<Position> positions;     // indexed by node id - 1
    Position base_station;
    std::vector<double> dist;            // N*N, row-major
    std::vector<double> dist_to_bs;      // size N

    int node_count() const { return static_cast<int>(positions.size()); }

    double distance(int i, int j) const {  // 0-based indices
        return dist[static_cast<std::size_t>(i) * positions.size() + static_cast<std::size_t>(j)];
    }
};

// Uniform random placement within the area (or config.fixed_positions when
// given), base station per config, distance matrix filled. Identical
// (config, seed) yields an identical Topology.
Topology generate_topology(const SimConfig& config, std::uint64_t seed);

// Fills dist and dist_to_bs from positions. Mirror-on-write: each pair is
// computed once, so dist[i][j] == dist[j][i] exactly.
void cal_distance(Topology& topology);

// Reads a positions file (CSV with an `id,x,y` header row).
std::vector<Position> load_positions_csv(const std::string& path);

// Portable [0,1) double from a 64-bit generator draw.
inline double canonical_u01(std::uint64_t raw) {
    return static_cast<double>(raw >> 11) * 0x1.0p-53;
}

}  // namespace dcpsim
