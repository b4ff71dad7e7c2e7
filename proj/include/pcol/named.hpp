#pragma once

#include <optional>
#include <string>
#include <variant>

#include "pcol/config.hpp"
#include "pcol/discharging.hpp"
#include "pcol/graph.hpp"

namespace pcol {

using NamedObject = std::variant<Graph, Configuration>;

/// Builders for every graph and configuration used in the arguments:
/// petersen, cycle(n), complete(n), sharpness_gadget, sharpness_doubled,
/// cube, dodecahedron, truncated_tetrahedron, cfg_3_7_4, cfg_5_5_5_I,
/// cfg_3_5_3. Throws std::invalid_argument for unknown names.
NamedObject build_named(const std::string& name);

/// Convenience: build_named restricted to plain graphs.
Graph build_named_graph(const std::string& name);

/// Planar rotation systems for the polyhedral graphs (k4, cube,
/// dodecahedron, truncated_tetrahedron, cycle(n)); faces verified by the
/// Euler identity in the test suite.
std::optional<RotationSystem> named_rotation(const std::string& name);

Graph petersen_graph();
Graph sharpness_gadget();
Graph sharpness_doubled();

}  // namespace pcol
