#include "pcol/discharging.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace pcol {

void RotationSystem::validate(const Graph& g) const {
  if (static_cast<int>(order.size()) != g.vertex_count()) {
    throw std::invalid_argument("rotation system has " + std::to_string(order.size()) +
                                " vertices, graph has " +
                                std::to_string(g.vertex_count()));
  }
  for (int v = 0; v < g.vertex_count(); v++) {
    std::vector<int> sorted = order[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v)) {
      throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                  " is not a permutation of its neighbors");
    }
  }
}

int RotationSystem::successor(int v, int u) const {
  const auto& ring = order[v];
  for (std::size_t i = 0; i < ring.size(); i++) {
    if (ring[i] == u) return ring[(i + 1) % ring.size()];
  }
  throw std::logic_error("vertex " + std::to_string(u) + " not in rotation of " +
                         std::to_string(v));
}

int FaceSet::total_length() const {
  int total = 0;
  for (const auto& face : faces) total += face.length();
  return total;
}

int FaceSet::face_of(int u, int v, int n) const {
  return directed_index_[static_cast<std::size_t>(u) * n + v];
}

FaceSet trace_faces(const Graph& g, const RotationSystem& rot) {
  rot.validate(g);
  int n = g.vertex_count();
  FaceSet out;
  out.directed_index_.assign(static_cast<std::size_t>(n) * n, -1);
  auto idx = [n](int u, int v) { return static_cast<std::size_t>(u) * n + v; };
  for (auto [a, b] : g.edges()) {
    for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
      if (out.directed_index_[idx(u, v)] != -1) continue;
      Face face;
      int face_id = static_cast<int>(out.faces.size());
      int cu = u, cv = v;
      do {
        out.directed_index_[idx(cu, cv)] = face_id;
        face.walk.emplace_back(cu, cv);
        int next = rot.successor(cv, cu);
        cu = cv;
        cv = next;
      } while (!(cu == u && cv == v));
      out.faces.push_back(std::move(face));
    }
  }
  return out;
}

ChargeLedger initial_charges(const Graph& g, const FaceSet& faces) {
  ChargeLedger ledger;
  for (int v = 0; v < g.vertex_count(); v++) {
    ledger.vertex_quarters.push_back(4LL * (2 * g.degree(v) - 6));
  }
  for (const auto& face : faces.faces) {
    ledger.face_quarters.push_back(4LL * (face.length() - 6));
  }
  return ledger;
}

long long euler_total_quarters(const Graph& g, const FaceSet& faces) {
  ChargeLedger ledger = initial_charges(g, faces);
  long long total = 0;
  for (long long q : ledger.vertex_quarters) total += q;
  for (long long q : ledger.face_quarters) total += q;
  return total;
}

void verify_euler_identity(const Graph& g, const FaceSet& faces) {
  if (!g.connected()) {
    throw std::invalid_argument("euler identity requires a connected graph");
  }
  long long total = euler_total_quarters(g, faces);
  if (total != -48) {
    throw std::runtime_error("charge total is " + Quarter{total}.str() +
                             ", expected -48/4; the rotation does not describe a "
                             "planar embedding");
  }
}

std::vector<Transfer> apply_rules(const Graph& g, const FaceSet& faces,
                                  ChargeLedger& ledger) {
  std::vector<Transfer> log;
  int n = g.vertex_count();
  for (auto [u, v] : g.edges()) {
    int f1 = faces.face_of(u, v, n);
    int f2 = faces.face_of(v, u, n);
    // Both orientations of a bridge lie on one face; no transfer possible.
    if (f1 == f2) continue;
    for (auto [small, big] : {std::pair{f1, f2}, std::pair{f2, f1}}) {
      if (faces.faces[big].length() < 7) continue;
      long long amount = 0;
      switch (faces.faces[small].length()) {
        case 3: amount = 4; break;
        case 4: amount = 2; break;
        case 5: amount = 1; break;
        default: continue;
      }
      ledger.face_quarters[big] -= amount;
      ledger.face_quarters[small] += amount;
      log.push_back({{u, v}, big, small, amount});
    }
  }
  return log;
}

HappinessReport happiness_report(const Graph& g, const FaceSet& faces,
                                 const ChargeLedger& ledger) {
  HappinessReport report;
  for (int v = 0; v < g.vertex_count(); v++) {
    if (ledger.vertex_quarters[v] < 0) report.unhappy_vertices.push_back(v);
  }
  int n = g.vertex_count();
  for (int f = 0; f < static_cast<int>(faces.faces.size()); f++) {
    FaceProfile profile;
    profile.id = f;
    profile.length = faces.faces[f].length();
    profile.x = profile.y = profile.z = 0;
    for (auto [u, v] : faces.faces[f].walk) {
      int other = faces.face_of(v, u, n);
      if (other == f) continue;
      switch (faces.faces[other].length()) {
        case 3: profile.x++; break;
        case 4: profile.y++; break;
        case 5: profile.z++; break;
        default: break;
      }
    }
    profile.initial_quarters = 4LL * (profile.length - 6);
    profile.final_quarters = ledger.face_quarters[f];
    if (profile.length >= 7) {
      long long expected = 4LL * (profile.length - 6) - 4LL * profile.x -
                           2LL * profile.y - 1LL * profile.z;
      if (expected != profile.final_quarters) report.arithmetic_ok = false;
    }
    if (profile.final_quarters < 0) report.unhappy_faces.push_back(f);
    report.per_face.push_back(profile);
  }
  return report;
}

std::string discharge_report_json(const Graph& g, const RotationSystem& rot) {
  FaceSet faces = trace_faces(g, rot);
  long long euler = euler_total_quarters(g, faces);
  ChargeLedger ledger = initial_charges(g, faces);
  auto transfers = apply_rules(g, faces, ledger);
  auto report = happiness_report(g, faces, ledger);

  nlohmann::json j;
  j["euler_total"] = Quarter{euler}.str();
  j["euler_ok"] = (euler == -48 && g.connected());
  j["arithmetic_ok"] = report.arithmetic_ok;
  j["faces"] = nlohmann::json::array();
  for (const auto& profile : report.per_face) {
    j["faces"].push_back({{"id", profile.id},
                          {"length", profile.length},
                          {"x", profile.x},
                          {"y", profile.y},
                          {"z", profile.z},
                          {"initial", Quarter{profile.initial_quarters}.str()},
                          {"final", Quarter{profile.final_quarters}.str()}});
  }
  j["transfers"] = nlohmann::json::array();
  for (const auto& transfer : transfers) {
    j["transfers"].push_back({{"edge", {transfer.edge.first, transfer.edge.second}},
                              {"from", transfer.from_face},
                              {"to", transfer.to_face},
                              {"amount", Quarter{transfer.amount_quarters}.str()}});
  }
  j["unhappy"] = {{"vertices", report.unhappy_vertices},
                  {"faces", report.unhappy_faces}};
  return j.dump(2);
}

}  // namespace pcol
