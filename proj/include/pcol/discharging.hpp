#pragma once

#include <string>
#include <vector>

#include "pcol/graph.hpp"

namespace pcol {

/// Per-vertex cyclic ordering of incident neighbors; encodes a planar
/// embedding and determines faces by the next-edge rule.
struct RotationSystem {
  std::vector<std::vector<int>> order;

  /// Throws std::invalid_argument unless each list is a permutation of the
  /// graph neighbors.
  void validate(const Graph& g) const;

  /// Neighbor following u in v's cyclic order.
  int successor(int v, int u) const;
};

/// Closed directed-edge walks; every directed edge lies on exactly one face.
struct Face {
  std::vector<std::pair<int, int>> walk;  // directed edges, in order
  int length() const { return static_cast<int>(walk.size()); }
};

struct FaceSet {
  std::vector<Face> faces;

  int total_length() const;
  /// Face id containing directed edge (u,v).
  int face_of(int u, int v, int n) const;

  std::vector<int> directed_index_;  // built by trace_faces
};

/// Face decomposition: the successor of directed edge (u,v) is (v,w) where
/// w follows u in v's rotation. A bridge contributes both sides to one face.
FaceSet trace_faces(const Graph& g, const RotationSystem& rot);

/// Quarter-integer charge value, stored as an integer multiple of 1/4.
struct Quarter {
  long long quarters = 0;
  std::string str() const { return std::to_string(quarters) + "/4"; }
  bool operator==(const Quarter&) const = default;
};

inline Quarter quarters(long long q) { return Quarter{q}; }

/// Per-vertex and per-face charges: Ch(v) = 2d(v)-6, Ch(f) = l(f)-6.
struct ChargeLedger {
  std::vector<long long> vertex_quarters;
  std::vector<long long> face_quarters;
};

ChargeLedger initial_charges(const Graph& g, const FaceSet& faces);

/// Sum of all charges, in quarter units; -48 (i.e. -12) exactly iff the
/// rotation describes a planar embedding of the connected graph.
long long euler_total_quarters(const Graph& g, const FaceSet& faces);

/// Throws std::runtime_error when the total is not -12.
void verify_euler_identity(const Graph& g, const FaceSet& faces);

struct Transfer {
  std::pair<int, int> edge;  // undirected, u < v
  int from_face;
  int to_face;
  long long amount_quarters;
};

/// Rules (i)-(iii): across every edge shared between a face of length 3, 4
/// or 5 and a face of length >= 7, transfer 1, 1/2 or 1/4 respectively
/// (per shared edge). Vertices are untouched.
std::vector<Transfer> apply_rules(const Graph& g, const FaceSet& faces,
                                  ChargeLedger& ledger);

struct FaceProfile {
  int id;
  int length;
  int x;  // shared edges with 3-faces
  int y;  // shared edges with 4-faces
  int z;  // shared edges with 5-faces
  long long initial_quarters;
  long long final_quarters;
};

struct HappinessReport {
  std::vector<int> unhappy_vertices;
  std::vector<int> unhappy_faces;
  std::vector<FaceProfile> per_face;
  /// For every face with length >= 7, ledger final equals l-6-x-y/2-z/4.
  bool arithmetic_ok = true;
};

HappinessReport happiness_report(const Graph& g, const FaceSet& faces,
                                 const ChargeLedger& ledger);

/// Full audit serialized as JSON: {euler_total, faces, transfers, unhappy},
/// charges as "p/4" strings.
std::string discharge_report_json(const Graph& g, const RotationSystem& rot);

}  // namespace pcol
