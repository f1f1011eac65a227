#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcpsim/types.hpp"

namespace dcpsim {

// Configuration or input-file problem; the message names the offending key.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Integer per-tick decrement schedule driving the simulation.
struct EnergySchedule {
    long long head_cost_per_cycle = 10;
    long long active_cost_per_tick = 2;
    long long idle_cost_per_tick = 1;
};

// First-order radio model feeding the analytical dissipation metric.
// tx cost = e_elec*bits + e_amp*bits*d^2, rx cost = e_elec*bits.
struct RadioModel {
    double e_elec = 50e-9;    // J/bit
    double e_amp = 100e-12;   // J/bit/m^2
    long long message_bits = 2000;
};

struct LeachConfig {
    double head_fraction = 0.05;
};

enum class Protocol { dcp, leach };

std::string protocol_name(Protocol p);
Protocol parse_protocol(const std::string& name);

struct SimConfig {
    int node_count = 450;
    double area_width = 1000.0;
    double area_height = 1000.0;
    double range = 150.0;            // cluster transmission range, meters
    int refresh_time = 10;           // ticks per refresh cycle
    double initial_energy_joules = 0.5;
    long long units_per_joule = 1000;
    double p_active = 0.5;           // per-tick activation probability
    long long horizon = 0;           // 0 = run until network death
    std::uint64_t seed = 1;

    EnergySchedule schedule;
    RadioModel radio;
    LeachConfig leach;

    std::optional<Position> base_station;   // default: area center
    std::vector<Position> fixed_positions;  // overrides random placement

    long long initial_units() const {
        return std::llround(initial_energy_joules * static_cast<double>(units_per_joule));
    }

    Position base_station_or_default() const {
        return base_station ? *base_station : Position{area_width / 2.0, area_height / 2.0};
    }

    // Throws ConfigError naming the first violated key.
    void validate() const;
};

}  // namespace dcpsim
