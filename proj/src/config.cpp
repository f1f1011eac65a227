#include "dcpsim/config.hpp"

namespace dcpsim {

std::string protocol_name(Protocol p) {
    return p == Protocol::dcp ? "dcp" : "leach";
}

Protocol parse_protocol(const std::string& name) {
    if (name == "dcp") return Protocol::dcp;
    if (name == "leach") return Protocol::leach;
    throw ConfigError("protocol: expected 'dcp' or 'leach', got '" + name + "'");
}

void SimConfig::validate() const {
    if (node_count < 1) throw ConfigError("nodes: must be >= 1");
    if (area_width <= 0) throw ConfigError("area_width: must be positive");
    if (area_height <= 0) throw ConfigError("area_height: must be positive");
    if (range <= 0) throw ConfigError("range: must be positive");
    if (refresh_time < 1) throw ConfigError("refresh_time: must be >= 1");
    if (initial_energy_joules < 0) throw ConfigError("initial_energy_joules: must be >= 0");
    if (units_per_joule <= 0) throw ConfigError("units_per_joule: must be positive");
    if (p_active < 0 || p_active > 1) throw ConfigError("p_active: must be in [0, 1]");
    if (horizon < 0) throw ConfigError("horizon: must be >= 0");
    if (!(schedule.idle_cost_per_tick >= 0 &&
          schedule.active_cost_per_tick >= schedule.idle_cost_per_tick &&
          schedule.head_cost_per_cycle >= schedule.active_cost_per_tick)) {
        throw ConfigError("energy schedule: requires head_cost_per_cycle >= "
                          "active_cost_per_tick >= idle_cost_per_tick >= 0");
    }
    if (radio.e_elec < 0) throw ConfigError("e_elec: must be >= 0");
    if (radio.e_amp < 0) throw ConfigError("e_amp: must be >= 0");
    if (radio.message_bits < 0) throw ConfigError("message_bits: must be >= 0");
    if (leach.head_fraction <= 0 || leach.head_fraction >= 1) {
        throw ConfigError("head_fraction: must be in (0, 1)");
    }
    if (!fixed_positions.empty() &&
        static_cast<int>(fixed_positions.size()) != node_count) {
        throw ConfigError("positions_file: node count " +
                          std::to_string(fixed_positions.size()) +
                          " does not match nodes = " + std::to_string(node_count));
    }
}

}  // namespace dcpsim
