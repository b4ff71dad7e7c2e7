#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "pcol/discharging.hpp"
#include "pcol/named.hpp"

using namespace pcol;

namespace {

std::multiset<int> face_lengths(const FaceSet& faces) {
  std::multiset<int> lengths;
  for (const auto& face : faces.faces) lengths.insert(face.length());
  return lengths;
}

RotationSystem any_rotation(const Graph& g) {
  RotationSystem rot;
  for (int v = 0; v < g.vertex_count(); v++) rot.order.push_back(g.neighbors(v));
  return rot;
}

// C8 with chord 0-2: faces are a triangle, a 7-face and the outer 8-face;
// the rules leave every face with charge exactly zero.
Graph octagon_chord() {
  Graph g(8);
  for (int i = 0; i < 8; i++) g.add_edge(i, (i + 1) % 8);
  g.add_edge(0, 2);
  return g;
}

RotationSystem octagon_chord_rotation() {
  // Octagon drawn on a circle, chord inside.
  RotationSystem rot;
  rot.order = {{7, 2, 1}, {0, 2}, {3, 1, 0}, {2, 4}, {3, 5},
               {4, 6},    {5, 7}, {6, 0}};
  return rot;
}

long long total_charge(const ChargeLedger& ledger) {
  long long total = 0;
  for (long long q : ledger.vertex_quarters) total += q;
  for (long long q : ledger.face_quarters) total += q;
  return total;
}

}  // namespace

TEST_CASE("rotation validation") {
  Graph k4 = build_named_graph("complete(4)");
  RotationSystem rot = *named_rotation("k4");
  CHECK_NOTHROW(rot.validate(k4));
  rot.order[0] = {1, 2};  // missing a neighbor
  CHECK_THROWS_AS(rot.validate(k4), std::invalid_argument);
  rot.order[0] = {1, 2, 2};
  CHECK_THROWS_AS(rot.validate(k4), std::invalid_argument);
  RotationSystem wrong_size;
  CHECK_THROWS_AS(wrong_size.validate(k4), std::invalid_argument);
}

TEST_CASE("polyhedra faces") {
  struct Case {
    const char* name;
    std::multiset<int> lengths;
  };
  for (const auto& c : {Case{"k4", {3, 3, 3, 3}},
                        Case{"cube", {4, 4, 4, 4, 4, 4}},
                        Case{"dodecahedron", {5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5}},
                        Case{"truncated_tetrahedron", {3, 3, 3, 3, 6, 6, 6, 6}}}) {
    CAPTURE(c.name);
    Graph g = build_named_graph(c.name == std::string("k4") ? "complete(4)" : c.name);
    auto faces = trace_faces(g, *named_rotation(c.name));
    CHECK(face_lengths(faces) == c.lengths);
    CHECK(euler_total_quarters(g, faces) == -48);
    CHECK_NOTHROW(verify_euler_identity(g, faces));
  }
}

TEST_CASE("every directed edge lies on exactly one face") {
  std::mt19937 rng(2024);
  for (const char* name : {"petersen", "cube", "dodecahedron", "cycle(9)"}) {
    Graph g = build_named_graph(name);
    // Random rotations still partition the directed edges.
    RotationSystem rot = any_rotation(g);
    for (auto& ring : rot.order) std::shuffle(ring.begin(), ring.end(), rng);
    auto faces = trace_faces(g, rot);
    CHECK(faces.total_length() == 2 * g.edge_count());
    std::map<std::pair<int, int>, int> seen;
    for (const auto& face : faces.faces) {
      for (auto e : face.walk) seen[e]++;
    }
    CHECK(static_cast<int>(seen.size()) == 2 * g.edge_count());
    for (const auto& [e, count] : seen) CHECK(count == 1);
  }
}

TEST_CASE("bridge contributes both sides to one face") {
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  auto faces = trace_faces(path, any_rotation(path));
  REQUIRE(faces.faces.size() == 1);
  CHECK(faces.faces[0].length() == 4);
  CHECK(faces.face_of(0, 1, 3) == faces.face_of(1, 0, 3));
}

TEST_CASE("K5 violates the Euler identity under any rotation") {
  Graph k5 = build_named_graph("complete(5)");
  auto faces = trace_faces(k5, any_rotation(k5));
  CHECK(euler_total_quarters(k5, faces) != -48);
  CHECK_THROWS_AS(verify_euler_identity(k5, faces), std::runtime_error);
}

TEST_CASE("initial charges") {
  Graph cube = build_named_graph("cube");
  auto faces = trace_faces(cube, *named_rotation("cube"));
  auto ledger = initial_charges(cube, faces);
  for (long long q : ledger.vertex_quarters) CHECK(q == 0);  // cubic: 2*3-6
  for (long long q : ledger.face_quarters) CHECK(q == -8);   // 4-6 = -2
  CHECK(Quarter{-8}.str() == "-8/4");
}

TEST_CASE("rules conserve charge on the corpus") {
  for (const char* name : {"k4", "cube", "dodecahedron", "truncated_tetrahedron",
                           "sharpness_gadget", "sharpness_doubled", "cycle(12)"}) {
    CAPTURE(name);
    Graph g = build_named_graph(name == std::string("k4") ? "complete(4)" : name);
    auto faces = trace_faces(g, *named_rotation(name));
    auto ledger = initial_charges(g, faces);
    long long before = total_charge(ledger);
    apply_rules(g, faces, ledger);
    CHECK(total_charge(ledger) == before);
    CHECK(before == -48);
  }
}

TEST_CASE("truncated tetrahedron final charges") {
  Graph g = build_named_graph("truncated_tetrahedron");
  auto faces = trace_faces(g, *named_rotation("truncated_tetrahedron"));
  auto ledger = initial_charges(g, faces);
  apply_rules(g, faces, ledger);
  // Hexagons are below the length-7 threshold: triangles keep -3, hexagons 0.
  std::multiset<long long> finals(ledger.face_quarters.begin(),
                                  ledger.face_quarters.end());
  CHECK(finals == std::multiset<long long>{-12, -12, -12, -12, 0, 0, 0, 0});
}

TEST_CASE("octagon with chord discharges to all-zero faces") {
  Graph g = octagon_chord();
  auto rot = octagon_chord_rotation();
  auto faces = trace_faces(g, rot);
  CHECK(face_lengths(faces) == std::multiset<int>{3, 7, 8});
  CHECK_NOTHROW(verify_euler_identity(g, faces));
  auto ledger = initial_charges(g, faces);
  auto transfers = apply_rules(g, faces, ledger);
  CHECK(transfers.size() == 3);  // triangle receives across all three edges
  for (long long q : ledger.face_quarters) CHECK(q == 0);
  auto report = happiness_report(g, faces, ledger);
  CHECK(report.arithmetic_ok);
  CHECK(report.unhappy_faces.empty());
  // Degree-2 ring vertices keep charge -2.
  CHECK(report.unhappy_vertices.size() == 6);
  for (const auto& profile : report.per_face) {
    if (profile.length == 7) {
      CHECK(profile.x == 1);
      CHECK(profile.y == 0);
      CHECK(profile.z == 0);
    }
    if (profile.length == 8) {
      CHECK(profile.x == 2);  // two octagon edges of the triangle
    }
  }
}

TEST_CASE("ledger arithmetic matches the profile formula on fuzzed embeddings") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 30; trial++) {
    const char* names[] = {"cube", "dodecahedron", "petersen", "cycle(10)"};
    Graph g = build_named_graph(names[trial % 4]);
    RotationSystem rot = any_rotation(g);
    for (auto& ring : rot.order) std::shuffle(ring.begin(), ring.end(), rng);
    auto faces = trace_faces(g, rot);
    auto ledger = initial_charges(g, faces);
    apply_rules(g, faces, ledger);
    auto report = happiness_report(g, faces, ledger);
    CHECK(report.arithmetic_ok);
  }
}

TEST_CASE("big-face inequality over all integer profiles") {
  // For 10 <= l <= 20 and any profile with 3x+2y <= l, 2x+(3/2)z <= l and
  // 2y+(3/2)z <= l: l-6-x-y/2-z/4 >= (3/5)l-6. Scaled by 20:
  // 20l-120-20x-10y-5z >= 12l-120, i.e. 20x+10y+5z <= 8l.
  for (int l = 10; l <= 20; l++) {
    for (int x = 0; 3 * x <= l; x++) {
      for (int y = 0; 3 * x + 2 * y <= l; y++) {
        for (int z = 0; z <= l; z++) {
          if (4 * x + 3 * z > 2 * l) continue;
          if (4 * y + 3 * z > 2 * l) continue;
          CAPTURE(l);
          CAPTURE(x);
          CAPTURE(y);
          CAPTURE(z);
          CHECK(20 * x + 10 * y + 5 * z <= 8 * l);
        }
      }
    }
  }
}

TEST_CASE("json report fields") {
  std::string j = discharge_report_json(octagon_chord(), octagon_chord_rotation());
  CHECK(j.find("\"euler_total\": \"-48/4\"") != std::string::npos);
  CHECK(j.find("\"euler_ok\": true") != std::string::npos);
  CHECK(j.find("\"arithmetic_ok\": true") != std::string::npos);
  CHECK(j.find("\"final\": \"0/4\"") != std::string::npos);
}
