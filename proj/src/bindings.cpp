#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dcpsim/batch.hpp"
#include "dcpsim/energy.hpp"
#include "dcpsim/leach.hpp"
#include "dcpsim/metrics.hpp"
#include "dcpsim/protocol.hpp"
#include "dcpsim/topology.hpp"

namespace py = pybind11;
using namespace dcpsim;

PYBIND11_MODULE(_dcpsim, m) {
    m.doc() = "Discrete-time cluster-protocol simulator (DCP and a static-cluster "
              "LEACH baseline)";

    py::register_exception<ConfigError>(m, "ConfigError");

    py::class_<Position>(m, "Position")
        .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
        .def_readwrite("x", &Position::x)
        .def_readwrite("y", &Position::y)
        .def("__repr__", [](const Position& p) {
            return "Position(" + format_double(p.x) + ", " + format_double(p.y) + ")";
        });

    py::class_<EnergySchedule>(m, "EnergySchedule")
        .def(py::init<>())
        .def_readwrite("head_cost_per_cycle", &EnergySchedule::head_cost_per_cycle)
        .def_readwrite("active_cost_per_tick", &EnergySchedule::active_cost_per_tick)
        .def_readwrite("idle_cost_per_tick", &EnergySchedule::idle_cost_per_tick);

    py::class_<RadioModel>(m, "RadioModel")
        .def(py::init<>())
        .def_readwrite("e_elec", &RadioModel::e_elec)
        .def_readwrite("e_amp", &RadioModel::e_amp)
        .def_readwrite("message_bits", &RadioModel::message_bits);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("node_count", &SimConfig::node_count)
        .def_readwrite("area_width", &SimConfig::area_width)
        .def_readwrite("area_height", &SimConfig::area_height)
        .def_readwrite("range", &SimConfig::range)
        .def_readwrite("refresh_time", &SimConfig::refresh_time)
        .def_readwrite("initial_energy_joules", &SimConfig::initial_energy_joules)
        .def_readwrite("units_per_joule", &SimConfig::units_per_joule)
        .def_readwrite("p_active", &SimConfig::p_active)
        .def_readwrite("horizon", &SimConfig::horizon)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("schedule", &SimConfig::schedule)
        .def_readwrite("radio", &SimConfig::radio)
        .def_readwrite("fixed_positions", &SimConfig::fixed_positions)
        .def("initial_units", &SimConfig::initial_units)
        .def("validate", &SimConfig::validate);

    py::class_<Topology>(m, "Topology")
        .def_readonly("positions", &Topology::positions)
        .def_readonly("base_station", &Topology::base_station)
        .def_readonly("dist_to_bs", &Topology::dist_to_bs)
        .def("node_count", &Topology::node_count)
        .def("distance", &Topology::distance, py::arg("i"), py::arg("j"));

    py::class_<RoundRecord>(m, "RoundRecord")
        .def_readonly("tick", &RoundRecord::tick)
        .def_readonly("cumulative_dissipated", &RoundRecord::cumulative_dissipated)
        .def_readonly("remaining_total", &RoundRecord::remaining_total)
        .def_readonly("alive_count", &RoundRecord::alive_count)
        .def_readonly("cluster_count", &RoundRecord::cluster_count)
        .def_readonly("mean_delay", &RoundRecord::mean_delay)
        .def_readonly("e_total_radio", &RoundRecord::e_total_radio);

    py::class_<SimulationResult>(m, "SimulationResult")
        .def_readonly("records", &SimulationResult::records)
        .def_readonly("lifetime", &SimulationResult::lifetime)
        .def_readonly("protocol", &SimulationResult::protocol)
        .def_readonly("seed", &SimulationResult::seed);

    m.def("generate_topology", &generate_topology, py::arg("config"), py::arg("seed"));
    m.def("run_dcp", &run_dcp, py::arg("config"), py::arg("topology"));
    m.def("run_leach", &run_leach, py::arg("config"), py::arg("topology"));
    m.def("tx_energy", &tx_energy, py::arg("model"), py::arg("dist"));
    m.def("rx_energy", &rx_energy, py::arg("model"));
    m.def("d_b", &d_b, py::arg("topology"));
}
