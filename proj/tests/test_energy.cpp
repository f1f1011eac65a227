#include <doctest.h>

#include <cmath>

#include "dcpsim/energy.hpp"
#include "dcpsim/protocol.hpp"

using namespace dcpsim;

namespace {

Topology fixed_topology(std::vector<Position> positions, Position bs) {
    SimConfig cfg;
    cfg.node_count = static_cast<int>(positions.size());
    cfg.fixed_positions = std::move(positions);
    cfg.base_station = bs;
    return generate_topology(cfg, 0);
}

}  // namespace

TEST_CASE("tx_energy examples") {
    RadioModel m;
    CHECK(tx_energy(m, 0.0) == m.e_elec * 2000);

    RadioModel pure_amp{0.0, 1.0, 1};
    CHECK(tx_energy(pure_amp, 3.0) == 9.0);

    // Independent arithmetic: 50e-9*2000 + 100e-12*2000*100^2
    RadioModel conventional{50e-9, 100e-12, 2000};
    double expected = 50e-9 * 2000.0 + 100e-12 * 2000.0 * 100.0 * 100.0;
    CHECK(tx_energy(conventional, 100.0) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(1.0e-4 + 2.0e-3).epsilon(1e-12));
}

TEST_CASE("rx_energy examples") {
    RadioModel empty{1.0, 1.0, 0};
    CHECK(rx_energy(empty) == 0.0);

    RadioModel unit{1.0, 0.0, 7};
    CHECK(rx_energy(unit) == 7.0);

    RadioModel defaults;
    CHECK(rx_energy(defaults) == tx_energy(defaults, 0.0));
}

TEST_CASE("tx_energy dominates rx_energy for any distance") {
    RadioModel m;
    for (double d : {0.0, 1.0, 17.3, 500.0}) {
        CHECK(tx_energy(m, d) >= rx_energy(m));
    }
}

TEST_CASE("e_total of a lone head at the base station") {
    Topology topo = fixed_topology({{5, 5}}, {5, 5});
    ClusterAssignment assignment;
    assignment.clusters.emplace(1, Cluster{1, {}});
    assignment.subsink = {1};
    RadioModel m;
    CHECK(e_total(m, assignment, topo, 1) == tx_energy(m, 0.0));
    CHECK_THROWS_AS(e_total(m, assignment, topo, 2), ConfigError);
}

TEST_CASE("e_total of a single-member cluster") {
    Topology topo = fixed_topology({{0, 0}, {3, 4}}, {10, 0});
    ClusterAssignment assignment;
    assignment.clusters.emplace(1, Cluster{1, {2}});
    RadioModel m;
    double expected = tx_energy(m, 5.0) + rx_energy(m) + tx_energy(m, 10.0);
    CHECK(e_total(m, assignment, topo, 1) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("4-node cluster matches a term-by-term oracle") {
    std::vector<Position> positions = {{10, 20}, {35, 5}, {60, 80}, {90, 15}};
    Position bs{50, 50};
    Topology topo = fixed_topology(positions, bs);
    ClusterAssignment assignment;
    assignment.clusters.emplace(1, Cluster{2, {1, 3, 4}});
    RadioModel m;

    auto euclid = [](Position a, Position b) {
        return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y));
    };
    double expected = 0.0;
    for (int member : {1, 3, 4}) {
        double d = euclid(positions[static_cast<std::size_t>(member - 1)], positions[1]);
        expected += m.e_elec * 2000 + m.e_amp * 2000 * d * d;  // member tx
        expected += m.e_elec * 2000;                            // head rx
    }
    double dhb = euclid(positions[1], bs);
    expected += m.e_elec * 2000 + m.e_amp * 2000 * dhb * dhb;

    CHECK(e_total(m, assignment, topo, 1) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("e_total is additive over member partitions") {
    std::vector<Position> positions = {{0, 0}, {10, 0}, {0, 10}, {10, 10}, {5, 20}};
    Topology topo = fixed_topology(positions, {50, 50});
    RadioModel m;

    ClusterAssignment whole;
    whole.clusters.emplace(1, Cluster{1, {2, 3, 4, 5}});
    ClusterAssignment part_a;
    part_a.clusters.emplace(1, Cluster{1, {2, 3}});
    ClusterAssignment part_b;
    part_b.clusters.emplace(1, Cluster{1, {4, 5}});

    // Splitting the member set splits the member terms; the head-to-BS term
    // is then counted twice.
    double head_to_bs = tx_energy(m, topo.dist_to_bs[0]);
    CHECK(e_total(m, whole, topo, 1) ==
          doctest::Approx(e_total(m, part_a, topo, 1) + e_total(m, part_b, topo, 1) -
                          head_to_bs).epsilon(1e-12));
}

TEST_CASE("e_total grows with distance") {
    RadioModel m;
    Position bs{0, 0};
    double previous = -1.0;
    for (double d : {1.0, 10.0, 50.0, 200.0}) {
        Topology topo = fixed_topology({{0, 0}, {d, 0}}, bs);
        ClusterAssignment assignment;
        assignment.clusters.emplace(1, Cluster{1, {2}});
        double e = e_total(m, assignment, topo, 1);
        CHECK(e > previous);
        previous = e;
    }
}
