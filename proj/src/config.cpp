#include "pcol/config.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace pcol {

void Configuration::validate() const {
  if (base.vertex_count() != extra.vertex_count()) {
    throw std::invalid_argument("base and extra vertex counts differ");
  }
  for (auto edge : base.edges()) {
    if (!extra.has_edge(edge.first, edge.second)) {
      throw std::invalid_argument("extra graph is missing base edge {" +
                                  std::to_string(edge.first) + "," +
                                  std::to_string(edge.second) + "}");
    }
  }
  if (!base.is_subcubic()) {
    throw std::invalid_argument("base graph is not subcubic");
  }
  std::set<int> used;
  for (const auto& triple : triples) {
    for (int id : {triple.boundary, triple.p1, triple.p2}) {
      if (id < 0 || id >= base.vertex_count()) {
        throw std::invalid_argument("triple vertex " + std::to_string(id) +
                                    " out of range");
      }
      if (!used.insert(id).second) {
        throw std::invalid_argument("triple vertex " + std::to_string(id) +
                                    " appears twice");
      }
    }
    if (!base.has_edge(triple.boundary, triple.p1) ||
        !base.has_edge(triple.boundary, triple.p2)) {
      throw std::invalid_argument("boundary vertex " + std::to_string(triple.boundary) +
                                  " is not adjacent to both pendant vertices");
    }
  }
}

namespace {

class Tokenizer {
 public:
  explicit Tokenizer(const std::string& bytes) : bytes_(bytes) {}

  std::size_t offset() const { return pos_; }

  void skip_whitespace() {
    while (pos_ < bytes_.size() && std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      pos_++;
    }
  }

  bool at_end() {
    skip_whitespace();
    return pos_ >= bytes_.size();
  }

  /// Next non-blank line, trimmed of trailing CR and surrounding blanks.
  std::string read_name_line() {
    while (pos_ < bytes_.size()) {
      std::size_t line_start = pos_;
      std::size_t end = bytes_.find('\n', pos_);
      if (end == std::string::npos) end = bytes_.size();
      std::string line = bytes_.substr(line_start, end - line_start);
      pos_ = end < bytes_.size() ? end + 1 : end;
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
        line.pop_back();
      }
      std::size_t first = 0;
      while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) {
        first++;
      }
      line = line.substr(first);
      if (!line.empty()) return line;
    }
    throw ParseError("expected configuration name", pos_);
  }

  int read_int(const std::string& what) {
    skip_whitespace();
    std::size_t start = pos_;
    if (pos_ < bytes_.size() && (bytes_[pos_] == '-' || bytes_[pos_] == '+')) pos_++;
    std::size_t digits = pos_;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      pos_++;
    }
    if (pos_ == digits) throw ParseError("expected integer for " + what, start);
    return std::stoi(bytes_.substr(start, pos_ - start));
  }

 private:
  const std::string& bytes_;
  std::size_t pos_ = 0;
};

Graph read_matrix_graph(Tokenizer& tok, int n) {
  Graph g(n);
  for (int x = 0; x < n; x++) {
    for (int y = x + 1; y < n; y++) {
      std::size_t at = tok.offset();
      int entry = tok.read_int("adjacency entry (" + std::to_string(x) + "," +
                               std::to_string(y) + ")");
      if (entry != 1 && entry != 2) {
        throw ParseError("adjacency entry must be 1 or 2, got " + std::to_string(entry),
                         at);
      }
      if (entry == 2) g.add_edge(x, y);
    }
  }
  return g;
}

}  // namespace

std::vector<Configuration> parse_config_file(const std::string& bytes) {
  Tokenizer tok(bytes);
  std::vector<Configuration> configs;
  while (!tok.at_end()) {
    Configuration cfg;
    cfg.name = tok.read_name_line();
    std::size_t record_at = tok.offset();
    int triple_count = tok.read_int("triple count");
    if (triple_count < 0) throw ParseError("negative triple count", record_at);
    for (int i = 0; i < triple_count; i++) {
      PendantTriple triple{};
      triple.boundary = tok.read_int("triple boundary vertex");
      triple.p1 = tok.read_int("triple pendant vertex");
      triple.p2 = tok.read_int("triple pendant vertex");
      cfg.triples.push_back(triple);
    }
    std::size_t base_at = tok.offset();
    int n = tok.read_int("vertex count");
    if (n < 0) throw ParseError("negative vertex count", base_at);
    try {
      cfg.base = read_matrix_graph(tok, n);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad base graph: ") + e.what(), tok.offset());
    }
    std::size_t extra_at = tok.offset();
    int n2 = tok.read_int("extra-graph vertex count");
    if (n2 != n) {
      throw ParseError("extra-graph vertex count " + std::to_string(n2) +
                           " differs from base " + std::to_string(n),
                       extra_at);
    }
    try {
      cfg.extra = read_matrix_graph(tok, n);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad extra graph: ") + e.what(), tok.offset());
    }
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw ParseError("record '" + cfg.name + "': " + e.what(), record_at);
    }
    configs.push_back(std::move(cfg));
  }
  return configs;
}

namespace {

void write_matrix(std::ostringstream& out, const Graph& g) {
  out << g.vertex_count() << "\n";
  for (int x = 0; x < g.vertex_count(); x++) {
    bool first = true;
    for (int y = x + 1; y < g.vertex_count(); y++) {
      if (!first) out << ' ';
      out << (g.has_edge(x, y) ? 2 : 1);
      first = false;
    }
    if (x + 1 < g.vertex_count()) out << "\n";
  }
}

}  // namespace

std::string serialize_config_file(const std::vector<Configuration>& configs) {
  std::ostringstream out;
  for (const auto& cfg : configs) {
    out << cfg.name << "\n" << cfg.triples.size() << "\n";
    for (const auto& triple : cfg.triples) {
      out << triple.boundary << ' ' << triple.p1 << ' ' << triple.p2 << "\n";
    }
    write_matrix(out, cfg.base);
    out << "\n";
    write_matrix(out, cfg.extra);
    out << "\n";
  }
  return out.str();
}

}  // namespace pcol
