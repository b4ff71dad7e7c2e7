#include "pcol/named.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pcol {

namespace {

struct Point {
  double x;
  double y;
};

// Neighbors sorted counterclockwise around each vertex; valid for any
// straight-line planar drawing.
RotationSystem rotation_from_coords(const Graph& g, const std::vector<Point>& pts) {
  RotationSystem rot;
  rot.order.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); v++) {
    auto ring = g.neighbors(v);
    std::sort(ring.begin(), ring.end(), [&](int a, int b) {
      double ta = std::atan2(pts[a].y - pts[v].y, pts[a].x - pts[v].x);
      double tb = std::atan2(pts[b].y - pts[v].y, pts[b].x - pts[v].x);
      return ta < tb;
    });
    rot.order[v] = std::move(ring);
  }
  return rot;
}

Point polar(double radius, double degrees) {
  double rad = degrees * std::numbers::pi / 180.0;
  return {radius * std::cos(rad), radius * std::sin(rad)};
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; i++) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; u++) {
    for (int v = u + 1; v < n; v++) g.add_edge(u, v);
  }
  return g;
}

Graph cube_graph() {
  // Inner square 0..3, outer square 4..7, spokes i -- i+4.
  Graph g(8);
  for (int i = 0; i < 4; i++) {
    g.add_edge(i, (i + 1) % 4);
    g.add_edge(i + 4, (i + 1) % 4 + 4);
    g.add_edge(i, i + 4);
  }
  return g;
}

Graph dodecahedron_graph() {
  // Schlegel layers: outer C5 0..4, middle C10 5..14, inner C5 15..19.
  Graph g(20);
  for (int i = 0; i < 5; i++) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(15 + i, 15 + (i + 1) % 5);
    g.add_edge(i, 5 + 2 * i);
    g.add_edge(15 + i, 5 + (2 * i + 1));
  }
  for (int j = 0; j < 10; j++) g.add_edge(5 + j, 5 + (j + 1) % 10);
  return g;
}

// Vertex (i,j), i != j: member of corner triangle i, matched to (j,i).
int tt_id(int i, int j) { return 3 * i + j - (j > i ? 1 : 0); }

Graph truncated_tetrahedron_graph() {
  Graph g(12);
  for (int i = 0; i < 4; i++) {
    for (int j = 0; j < 4; j++) {
      if (j == i) continue;
      for (int k = j + 1; k < 4; k++) {
        if (k == i) continue;
        g.add_edge(tt_id(i, j), tt_id(i, k));
      }
      if (i < j) g.add_edge(tt_id(i, j), tt_id(j, i));
    }
  }
  return g;
}

std::vector<Point> truncated_tetrahedron_coords() {
  std::vector<Point> pts(12);
  // Outer hexagon: the face through triangles 1,2,3.
  pts[tt_id(1, 2)] = polar(3, 90);
  pts[tt_id(2, 1)] = polar(3, 150);
  pts[tt_id(2, 3)] = polar(3, 210);
  pts[tt_id(3, 2)] = polar(3, 270);
  pts[tt_id(3, 1)] = polar(3, 330);
  pts[tt_id(1, 3)] = polar(3, 30);
  pts[tt_id(1, 0)] = polar(2, 60);
  pts[tt_id(2, 0)] = polar(2, 180);
  pts[tt_id(3, 0)] = polar(2, 300);
  pts[tt_id(0, 1)] = polar(1, 60);
  pts[tt_id(0, 2)] = polar(1, 180);
  pts[tt_id(0, 3)] = polar(1, 300);
  return pts;
}

std::vector<Point> sharpness_gadget_coords() {
  // Outer 5-cycle v1 v2 v7 v5 v4 with v3, v6 inside.
  std::vector<Point> pts(7);
  pts[0] = polar(3, 90);    // v1
  pts[1] = polar(3, 162);   // v2
  pts[6] = polar(3, 234);   // v7
  pts[4] = polar(3, 306);   // v5
  pts[3] = polar(3, 18);    // v4
  pts[2] = {-1.1, -0.6};    // v3
  pts[5] = {1.1, -0.6};     // v6
  return pts;
}

Configuration make_config(std::string name, Graph core, std::vector<int> boundary) {
  // Boundary vertices get two fresh pendant leaves each.
  int n = core.vertex_count();
  int total = n + 2 * static_cast<int>(boundary.size());
  Graph base(total);
  for (auto [u, v] : core.edges()) base.add_edge(u, v);
  Configuration cfg;
  cfg.name = std::move(name);
  int next = n;
  for (int b : boundary) {
    base.add_edge(b, next);
    base.add_edge(b, next + 1);
    cfg.triples.push_back({b, next, next + 1});
    next += 2;
  }
  cfg.base = base;
  cfg.extra = base;
  return cfg;
}

Configuration cfg_3_5_3() {
  // Triangle u1u2u3, five cycle v2 w1 w2 w3 w4 joined by u2v2, triangle
  // w1' z1 z2 joined by w1w1'.
  // ids: u1..u3 = 0..2, v2 = 3, w1..w4 = 4..7, w1' = 8, z1 = 9, z2 = 10,
  //      boundary v1 = 11, v3 = 12, w2' = 13, w3' = 14, w4' = 15,
  //      z1' = 16, z2' = 17.
  Graph core(18);
  core.add_edge(0, 1);
  core.add_edge(1, 2);
  core.add_edge(0, 2);
  core.add_edge(1, 3);
  core.add_edge(3, 4);
  core.add_edge(4, 5);
  core.add_edge(5, 6);
  core.add_edge(6, 7);
  core.add_edge(7, 3);
  core.add_edge(4, 8);
  core.add_edge(8, 9);
  core.add_edge(9, 10);
  core.add_edge(8, 10);
  core.add_edge(0, 11);
  core.add_edge(2, 12);
  core.add_edge(5, 13);
  core.add_edge(6, 14);
  core.add_edge(7, 15);
  core.add_edge(9, 16);
  core.add_edge(10, 17);
  return make_config("cfg_3_5_3", core, {11, 12, 13, 14, 15, 16, 17});
}

Configuration cfg_3_7_4() {
  // Triangle u1u2u3 sharing edge u2u3 with the seven cycle u2..u8; the
  // four cycle is u5 u6 u12 u11 via the edge u11u12.
  // ids: u1..u8 = 0..7, u9 = 8, u10 = 9, u11 = 10, u12 = 11, u13 = 12,
  //      u14 = 13, u15 = 14, unnamed third neighbor of u12 = 15.
  Graph core(16);
  core.add_edge(0, 1);
  core.add_edge(0, 2);
  core.add_edge(1, 2);
  core.add_edge(2, 3);
  core.add_edge(3, 4);
  core.add_edge(4, 5);
  core.add_edge(5, 6);
  core.add_edge(6, 7);
  core.add_edge(7, 1);
  core.add_edge(0, 8);
  core.add_edge(3, 9);
  core.add_edge(4, 10);
  core.add_edge(5, 11);
  core.add_edge(6, 12);
  core.add_edge(7, 13);
  core.add_edge(10, 11);
  core.add_edge(10, 14);
  core.add_edge(11, 15);
  return make_config("cfg_3_7_4", core, {8, 9, 12, 13, 14, 15});
}

Configuration cfg_5_5_5_I() {
  // Middle five cycle u1..u5; v_i outside neighbors; v2''=v3'' and
  // v4''=v5'' close the two flanking five cycles.
  // ids: u1..u5 = 0..4, v2 = 5, v3 = 6, v4 = 7, v5 = 8, v2'' = 9,
  //      v4'' = 10, boundary v1 = 11, v2' = 12, v3' = 13, v4' = 14,
  //      v5' = 15, w4 = 16, y2 = 17.
  Graph core(18);
  for (int i = 0; i < 5; i++) core.add_edge(i, (i + 1) % 5);
  core.add_edge(1, 5);
  core.add_edge(2, 6);
  core.add_edge(3, 7);
  core.add_edge(4, 8);
  core.add_edge(0, 11);
  core.add_edge(5, 9);
  core.add_edge(6, 9);
  core.add_edge(7, 10);
  core.add_edge(8, 10);
  core.add_edge(5, 12);
  core.add_edge(6, 13);
  core.add_edge(7, 14);
  core.add_edge(8, 15);
  core.add_edge(10, 16);
  core.add_edge(9, 17);
  return make_config("cfg_5_5_5_I", core, {11, 12, 13, 14, 15, 16, 17});
}

bool parse_sized(const std::string& name, const std::string& prefix, int& n) {
  if (name.size() <= prefix.size() + 2) return false;
  if (name.compare(0, prefix.size(), prefix) != 0) return false;
  if (name[prefix.size()] != '(' || name.back() != ')') return false;
  try {
    n = std::stoi(name.substr(prefix.size() + 1,
                              name.size() - prefix.size() - 2));
  } catch (...) {
    return false;
  }
  return true;
}

}  // namespace

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; i++) {
    g.add_edge(i, (i + 1) % 5);      // outer cycle
    g.add_edge(i, i + 5);            // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph sharpness_gadget() {
  Graph g(7);
  g.add_edge(0, 1);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  g.add_edge(1, 6);
  g.add_edge(2, 6);
  g.add_edge(2, 5);
  g.add_edge(3, 4);
  g.add_edge(3, 5);
  g.add_edge(4, 5);
  g.add_edge(4, 6);
  return g;
}

Graph sharpness_doubled() {
  Graph g = Graph::disjoint_union(sharpness_gadget(), sharpness_gadget());
  g.add_edge(0, 7);
  return g;
}

NamedObject build_named(const std::string& name) {
  int n = 0;
  if (name == "petersen") return petersen_graph();
  if (name == "sharpness_gadget") return sharpness_gadget();
  if (name == "sharpness_doubled") return sharpness_doubled();
  if (name == "cube") return cube_graph();
  if (name == "dodecahedron") return dodecahedron_graph();
  if (name == "truncated_tetrahedron") return truncated_tetrahedron_graph();
  if (name == "k4") return complete_graph(4);
  if (parse_sized(name, "cycle", n)) return cycle_graph(n);
  if (parse_sized(name, "complete", n)) return complete_graph(n);
  if (name == "cfg_3_7_4") return cfg_3_7_4();
  if (name == "cfg_5_5_5_I") return cfg_5_5_5_I();
  if (name == "cfg_3_5_3") return cfg_3_5_3();
  throw std::invalid_argument("unknown name '" + name + "'");
}

Graph build_named_graph(const std::string& name) {
  auto obj = build_named(name);
  if (auto* g = std::get_if<Graph>(&obj)) return *g;
  throw std::invalid_argument("'" + name + "' names a configuration, not a graph");
}

std::optional<RotationSystem> named_rotation(const std::string& name) {
  int n = 0;
  if (name == "k4" || name == "complete(4)") {
    std::vector<Point> pts = {{0, 0}, polar(2, 90), polar(2, 210), polar(2, 330)};
    return rotation_from_coords(complete_graph(4), pts);
  }
  if (name == "cube") {
    std::vector<Point> pts(8);
    for (int i = 0; i < 4; i++) {
      pts[i] = polar(1, 45 + 90.0 * i);
      pts[i + 4] = polar(2, 45 + 90.0 * i);
    }
    return rotation_from_coords(cube_graph(), pts);
  }
  if (name == "dodecahedron") {
    std::vector<Point> pts(20);
    for (int i = 0; i < 5; i++) {
      pts[i] = polar(4, 90 + 72.0 * i);
      pts[15 + i] = polar(1, 90 + 72.0 * i + 36);
    }
    for (int j = 0; j < 10; j++) pts[5 + j] = polar(2.2, 90 + 36.0 * j);
    return rotation_from_coords(dodecahedron_graph(), pts);
  }
  if (name == "truncated_tetrahedron") {
    return rotation_from_coords(truncated_tetrahedron_graph(),
                                truncated_tetrahedron_coords());
  }
  if (name == "sharpness_gadget") {
    return rotation_from_coords(sharpness_gadget(), sharpness_gadget_coords());
  }
  if (name == "sharpness_doubled") {
    auto base = sharpness_gadget_coords();
    std::vector<Point> pts(14);
    for (int i = 0; i < 7; i++) {
      pts[i] = {base[i].x - 4.5, base[i].y};
      pts[i + 7] = {-base[i].x + 4.5, base[i].y};
    }
    return rotation_from_coords(sharpness_doubled(), pts);
  }
  if (parse_sized(name, "cycle", n)) {
    std::vector<Point> pts(n);
    for (int i = 0; i < n; i++) pts[i] = polar(2, 360.0 * i / n);
    return rotation_from_coords(cycle_graph(n), pts);
  }
  return std::nullopt;
}

}  // namespace pcol
