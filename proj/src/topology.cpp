#include "dcpsim/topology.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace dcpsim {

namespace {

double euclid(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace

Topology generate_topology(const SimConfig& config, std::uint64_t seed) {
    config.validate();

    Topology topo;
    topo.base_station = config.base_station_or_default();

    if (!config.fixed_positions.empty()) {
        topo.positions = config.fixed_positions;
        for (std::size_t i = 0; i < topo.positions.size(); ++i) {
            const Position& p = topo.positions[i];
            if (p.x < 0 || p.x > config.area_width || p.y < 0 || p.y > config.area_height) {
                throw ConfigError("positions: node " + std::to_string(i + 1) +
                                  " lies outside the simulation area");
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        topo.positions.reserve(static_cast<std::size_t>(config.node_count));
        for (int i = 0; i < config.node_count; ++i) {
            double x = canonical_u01(rng()) * config.area_width;
            double y = canonical_u01(rng()) * config.area_height;
            topo.positions.push_back({x, y});
        }
    }

    cal_distance(topo);
    return topo;
}

void cal_distance(Topology& topology) {
    const std::size_t n = topology.positions.size();
    topology.dist.assign(n * n, 0.0);
    topology.dist_to_bs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        topology.dist_to_bs[i] = euclid(topology.positions[i], topology.base_station);
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = euclid(topology.positions[i], topology.positions[j]);
            topology.dist[i * n + j] = d;
            topology.dist[j * n + i] = d;  // mirrored, exact symmetry
        }
    }
}

std::vector<Position> load_positions_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("positions_file: cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw ConfigError("positions_file: empty file " + path);

    std::vector<Position> positions;
    std::size_t expected_id = 1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string id_s, x_s, y_s;
        if (!std::getline(row, id_s, ',') || !std::getline(row, x_s, ',') ||
            !std::getline(row, y_s, ',')) {
            throw ConfigError("positions_file: malformed row '" + line + "'");
        }
        std::size_t id;
        try {
            id = std::stoul(id_s);
            positions.push_back({std::stod(x_s), std::stod(y_s)});
        } catch (const std::exception&) {
            throw ConfigError("positions_file: malformed row '" + line + "'");
        }
        if (id != expected_id) {
            throw ConfigError("positions_file: ids must be 1,2,... in order, got " + id_s);
        }
        ++expected_id;
    }
    if (positions.empty()) throw ConfigError("positions_file: no nodes in " + path);
    return positions;
}

}  // namespace dcpsim
