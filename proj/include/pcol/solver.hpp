#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcol/graph.hpp"

namespace pcol {

/// Non-decreasing sequence of packing radii; index i (1-based) is color i.
class PackingSpec {
 public:
  explicit PackingSpec(std::vector<int> radii);

  /// Parse a comma list such as "1,2,2,2,2,2".
  static PackingSpec parse(const std::string& text);

  int color_count() const { return static_cast<int>(radii_.size()); }
  int radius(int color) const { return radii_[color - 1]; }
  const std::vector<int>& radii() const { return radii_; }

  bool operator==(const PackingSpec& other) const { return radii_ == other.radii_; }

 private:
  std::vector<int> radii_;
};

/// Total map vertex -> {0..k}; 0 means uncolored.
using Coloring = std::vector<int>;

struct Violation {
  int color;
  int u;
  int v;
  int dist;
  bool operator==(const Violation& other) const {
    return color == other.color && u == other.u && v == other.v && dist == other.dist;
  }
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Conflict graphs per color: color c conflicts along edges of g^radius(c).
/// Power graphs are shared between colors of equal radius.
class ConflictGraphs {
 public:
  ConflictGraphs(const Graph& g, const PackingSpec& spec);

  const Graph& for_color(int color) const { return powers_[power_index_[color - 1]]; }
  const PackingSpec& spec() const { return spec_; }

 private:
  PackingSpec spec_;
  std::vector<Graph> powers_;
  std::vector<int> power_index_;
};

/// All same-color pairs u < v within the color's conflict distance.
ValidationReport verify(const Graph& g, const PackingSpec& spec, const Coloring& c);

struct ExtendStats {
  std::uint64_t nodes = 0;  // search-tree nodes visited
};

/// Extension-only backtracking: precolored vertices are never recolored,
/// uncolored vertices are filled in increasing id, colors tried 1..k.
/// Throws std::invalid_argument if the partial coloring is itself invalid.
std::optional<Coloring> extend(const Graph& g, const PackingSpec& spec,
                               const Coloring& partial, ExtendStats* stats = nullptr);

std::optional<Coloring> extend(const ConflictGraphs& conflicts, const Coloring& partial,
                               ExtendStats* stats = nullptr);

struct RefutationCertificate {
  std::uint64_t node_count = 0;
  bool exhaustive = false;
  /// Present when the refutation failed because a coloring exists.
  std::optional<Coloring> witness;
  bool uncolorable() const { return exhaustive && !witness; }
};

/// Exhaustive refutation; if a coloring exists the certificate carries it
/// as a witness and uncolorable() is false.
RefutationCertificate prove_uncolorable(const Graph& g, const PackingSpec& spec);

/// One distinct color per demand set, via bipartite augmenting paths.
/// Returns absent iff Hall's condition fails.
std::optional<std::vector<int>> sdr_assign(const std::vector<std::vector<int>>& demands);

struct SharpnessReport {
  bool ok = false;
  std::vector<std::string> failures;
  std::optional<Coloring> doubled_coloring;  // a (1,2^5)-coloring of the doubled graph
};

/// Checks every property the sharpness argument consumes: |V|=7, subcubic
/// with deg(v1)=2, diameter 2, two vertex-disjoint triangles covering the
/// other six vertices, and the doubled graph (two copies joined at v1)
/// (1,2^5)-colorable but not (1,2^4)-colorable.
SharpnessReport validate_sharpness_gadget(const Graph& g1, int v1);

}  // namespace pcol
