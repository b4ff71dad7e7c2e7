#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcol/graph.hpp"

namespace pcol {

/// (boundary, p1, p2): a boundary vertex and its two outside neighbors.
struct PendantTriple {
  int boundary;
  int p1;
  int p2;
  bool operator==(const PendantTriple&) const = default;
};

/// The checker's unit of work: a base graph, the same graph with extra
/// edges added between boundary vertices, and the ordered pendant triples.
struct Configuration {
  std::string name;
  Graph base;
  Graph extra;
  std::vector<PendantTriple> triples;

  /// Structural validation; throws std::invalid_argument on failure.
  void validate() const;
};

/// The 30 pendant-triple color patterns over colors {1..6}, in the order
/// used by the checker. The first `kFirstTripleCount` are the only patterns
/// tried on triple 0 unless the exhaustive override is on.
using OuterPattern = std::array<int, 3>;

inline constexpr int kOuterPatternCount = 30;
inline constexpr int kFirstTripleCount = 2;

inline constexpr std::array<OuterPattern, kOuterPatternCount> kOuterPatterns = {{
    {6, 1, 2}, {6, 1, 3}, {6, 1, 4}, {6, 1, 5},
    {5, 1, 2}, {5, 1, 3}, {5, 1, 4}, {5, 1, 6},
    {4, 1, 2}, {4, 1, 3}, {4, 1, 5}, {4, 1, 6},
    {3, 1, 2}, {3, 1, 4}, {3, 1, 5}, {3, 1, 6},
    {2, 1, 3}, {2, 1, 4}, {2, 1, 5}, {2, 1, 6},
    {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4},
    {1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {1, 5, 6},
}};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Parses the checker's input format: records of [name line, triple count T,
/// T id triples, vertex count n, upper-triangular adjacency matrix with
/// 2 = edge and 1 = non-edge, then n and the matrix again with extra edges],
/// repeated until end of input.
std::vector<Configuration> parse_config_file(const std::string& bytes);

/// Serializes configurations back into the same format. Re-parsing yields
/// the same graphs, triples and names.
std::string serialize_config_file(const std::vector<Configuration>& configs);

/// The verbatim sample input file from the checker's distribution.
const std::string& sample_config_text();

}  // namespace pcol
