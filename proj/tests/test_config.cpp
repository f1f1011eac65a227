#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "dcpsim/batch.hpp"

using namespace dcpsim;

namespace {

BatchSpec parse_text(const std::string& text) {
    const char* path = "test_config.ini";
    {
        std::ofstream out(path);
        out << text;
    }
    BatchSpec spec = parse_config_file(path);
    std::remove(path);
    return spec;
}

}  // namespace

TEST_CASE("empty file keeps all defaults") {
    BatchSpec spec = parse_text("");
    CHECK(spec.base.node_count == 450);
    CHECK(spec.base.area_width == 1000);
    CHECK(spec.base.area_height == 1000);
    CHECK(spec.base.range == 150);
    CHECK(spec.base.refresh_time == 10);
    CHECK(spec.base.initial_energy_joules == 0.5);
    CHECK(spec.base.units_per_joule == 1000);
    CHECK(spec.base.initial_units() == 500);
    CHECK(spec.base.p_active == 0.5);
    CHECK(spec.base.schedule.head_cost_per_cycle == 10);
    CHECK(spec.base.schedule.active_cost_per_tick == 2);
    CHECK(spec.base.schedule.idle_cost_per_tick == 1);
    CHECK(spec.base.radio.e_elec == 50e-9);
    CHECK(spec.base.radio.e_amp == 100e-12);
    CHECK(spec.base.radio.message_bits == 2000);
    CHECK(spec.base.leach.head_fraction == 0.05);
    CHECK(spec.seeds == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
    CHECK(spec.protocols.size() == 2);
}

TEST_CASE("file values are read, flags take precedence") {
    BatchSpec spec = parse_text(
        "nodes = 450\n"
        "range = 120\n"
        "[energy]\n"
        "e_elec = 1e-8\n"
        "[leach]\n"
        "head_fraction = 0.1\n");
    CHECK(spec.base.node_count == 450);
    CHECK(spec.base.range == 120);
    CHECK(spec.base.radio.e_elec == 1e-8);
    CHECK(spec.base.leach.head_fraction == 0.1);

    apply_override(spec, "nodes", "10");
    CHECK(spec.base.node_count == 10);
}

TEST_CASE("constraint violations name the offending key") {
    BatchSpec spec = parse_text("refresh_time = 0\n");
    try {
        spec.base.validate();
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("refresh_time") != std::string::npos);
    }

    spec = parse_text("p_active = 1.5\n");
    CHECK_THROWS_AS(spec.base.validate(), ConfigError);
}

TEST_CASE("parse failures name the key or line") {
    CHECK_THROWS_AS(parse_text("no_such_key = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_text("nodes ten\n"), ConfigError);
    CHECK_THROWS_AS(parse_text("nodes = ten\n"), ConfigError);
    CHECK_THROWS_AS(parse_text("[mystery]\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_file("missing_config.ini"), ConfigError);
}

TEST_CASE("seed lists and protocol selection") {
    BatchSpec spec = parse_text("seeds = 9, 4, 7\nprotocol = leach\n");
    CHECK(spec.seeds == std::vector<std::uint64_t>{9, 4, 7});
    REQUIRE(spec.protocols.size() == 1);
    CHECK(spec.protocols[0] == Protocol::leach);

    CHECK_THROWS_AS(parse_text("protocol = aodv\n"), ConfigError);
    CHECK_THROWS_AS(parse_text("seeds = ,\n"), ConfigError);
}

TEST_CASE("rendered config round-trips") {
    BatchSpec spec = parse_text(
        "nodes = 37\n"
        "area_width = 512.5\n"
        "area_height = 300\n"
        "range = 99.25\n"
        "refresh_time = 4\n"
        "initial_energy_joules = 0.25\n"
        "p_active = 0.3\n"
        "horizon = 123\n"
        "base_station_x = 10\n"
        "base_station_y = 20\n"
        "seeds = 2,4\n"
        "protocol = dcp\n"
        "[energy]\n"
        "head_cost_per_cycle = 12\n"
        "active_cost_per_tick = 3\n"
        "idle_cost_per_tick = 1\n"
        "e_amp = 2e-10\n"
        "[leach]\n"
        "head_fraction = 0.07\n");

    BatchSpec reparsed = parse_text(render_config(spec));
    CHECK(reparsed.base.node_count == spec.base.node_count);
    CHECK(reparsed.base.area_width == spec.base.area_width);
    CHECK(reparsed.base.area_height == spec.base.area_height);
    CHECK(reparsed.base.range == spec.base.range);
    CHECK(reparsed.base.refresh_time == spec.base.refresh_time);
    CHECK(reparsed.base.initial_energy_joules == spec.base.initial_energy_joules);
    CHECK(reparsed.base.p_active == spec.base.p_active);
    CHECK(reparsed.base.horizon == spec.base.horizon);
    REQUIRE(reparsed.base.base_station.has_value());
    CHECK(reparsed.base.base_station->x == 10);
    CHECK(reparsed.base.base_station->y == 20);
    CHECK(reparsed.seeds == spec.seeds);
    CHECK(reparsed.protocols == spec.protocols);
    CHECK(reparsed.base.schedule.head_cost_per_cycle == 12);
    CHECK(reparsed.base.schedule.active_cost_per_tick == 3);
    CHECK(reparsed.base.radio.e_amp == 2e-10);
    CHECK(reparsed.base.leach.head_fraction == 0.07);
    CHECK(render_config(reparsed) == render_config(spec));
}

TEST_CASE("positions file sets placements and node count") {
    const char* positions_path = "test_override_positions.csv";
    {
        std::ofstream out(positions_path);
        out << "id,x,y\n1,1,2\n2,3,4\n";
    }
    BatchSpec spec = parse_text(std::string("positions_file = ") + positions_path + "\n");
    CHECK(spec.base.node_count == 2);
    REQUIRE(spec.base.fixed_positions.size() == 2);
    CHECK(spec.base.fixed_positions[1].x == 3.0);
    std::remove(positions_path);
}

TEST_CASE("run_batch output is sorted by protocol then seed") {
    BatchSpec spec;
    spec.base.node_count = 8;
    spec.base.area_width = spec.base.area_height = 100;
    spec.base.range = 50;
    spec.base.horizon = 20;
    spec.seeds = {5, 2};
    std::vector<SimulationResult> results = run_batch(spec);
    REQUIRE(results.size() == 4);
    CHECK(results[0].protocol == "dcp");
    CHECK(results[0].seed == 2);
    CHECK(results[1].seed == 5);
    CHECK(results[2].protocol == "leach");
    CHECK(results[2].seed == 2);
    CHECK(results[3].seed == 5);
}

TEST_CASE("compare_report rejects a single protocol") {
    BatchSpec spec;
    spec.base.node_count = 8;
    spec.base.area_width = spec.base.area_height = 100;
    spec.base.horizon = 20;
    spec.seeds = {1};
    spec.protocols = {Protocol::dcp};
    std::vector<SimulationResult> results = run_batch(spec);
    CHECK_THROWS_AS(compare_report(results, spec.base), ConfigError);
}
