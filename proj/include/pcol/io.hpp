#pragma once

#include <string>

#include "pcol/discharging.hpp"
#include "pcol/graph.hpp"
#include "pcol/solver.hpp"

namespace pcol {

/// Edge-list format: "n m" header then m lines "u v". Whitespace and
/// CRLF tolerant. Throws std::runtime_error with a description on bad input.
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

/// Coloring file: n whitespace-separated integers (0 = uncolored).
Coloring parse_coloring(const std::string& text, int n);
std::string serialize_coloring(const Coloring& coloring);

/// Rotation file: line i lists vertex i's neighbors in cyclic order. An
/// empty line means an isolated vertex. Validated against g.
RotationSystem parse_rotation(const std::string& text, const Graph& g);
std::string serialize_rotation(const RotationSystem& rot);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// FNV-1a 64-bit digest, as 16 hex digits; recorded in run reports.
std::string fnv1a_digest(const std::string& bytes);

}  // namespace pcol
