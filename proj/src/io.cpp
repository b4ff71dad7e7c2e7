#include "pcol/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pcol {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error(what); }

int next_int(std::istream& in, const char* what) {
  int value;
  if (!(in >> value)) fail(std::string("expected ") + what);
  return value;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  int n = next_int(in, "vertex count");
  int m = next_int(in, "edge count");
  if (n < 0 || m < 0) fail("negative counts in edge-list header");
  Graph g(n);
  for (int i = 0; i < m; i++) {
    int u = next_int(in, "edge endpoint");
    int v = next_int(in, "edge endpoint");
    if (u < 0 || u >= n || v < 0 || v >= n) {
      fail("edge endpoint out of range in edge " + std::to_string(i));
    }
    g.add_edge(u, v);
  }
  int extra;
  if (in >> extra) fail("trailing data after the declared edges");
  return g;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Coloring parse_coloring(const std::string& text, int n) {
  std::istringstream in(text);
  Coloring coloring;
  int value;
  while (in >> value) coloring.push_back(value);
  if (static_cast<int>(coloring.size()) != n) {
    fail("coloring has " + std::to_string(coloring.size()) + " entries, expected " +
         std::to_string(n));
  }
  for (int c : coloring) {
    if (c < 0) fail("negative color");
  }
  return coloring;
}

std::string serialize_coloring(const Coloring& coloring) {
  std::ostringstream out;
  for (std::size_t i = 0; i < coloring.size(); i++) {
    out << coloring[i] << (i + 1 == coloring.size() ? '\n' : ' ');
  }
  return out.str();
}

RotationSystem parse_rotation(const std::string& text, const Graph& g) {
  RotationSystem rot;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::vector<int> ring;
    int v;
    while (fields >> v) ring.push_back(v);
    rot.order.push_back(std::move(ring));
  }
  // Missing trailing lines stand for isolated vertices.
  while (static_cast<int>(rot.order.size()) < g.vertex_count()) rot.order.push_back({});
  rot.validate(g);
  return rot;
}

std::string serialize_rotation(const RotationSystem& rot) {
  std::ostringstream out;
  for (const auto& ring : rot.order) {
    for (std::size_t i = 0; i < ring.size(); i++) {
      out << ring[i] << (i + 1 == ring.size() ? "" : " ");
    }
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write '" + path + "'");
  out << content;
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace pcol
