#include "pcol/reducibility.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace pcol {

namespace {

const PackingSpec& good_spec() {
  static const PackingSpec spec({1, 2, 2, 2, 2, 2});
  return spec;
}

std::uint64_t pow30(int e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= 30;
  return out;
}

}  // namespace

PrecoloringStream::PrecoloringStream(const Configuration& cfg, bool exhaustive_first)
    : cfg_(&cfg),
      first_range_(exhaustive_first ? kOuterPatternCount : kFirstTripleCount) {
  int t = static_cast<int>(cfg.triples.size());
  total_ = t == 0 ? 1 : static_cast<std::uint64_t>(first_range_) * pow30(t - 1);
}

Coloring PrecoloringStream::precoloring(const std::vector<int>& indices) const {
  Coloring pre(cfg_->base.vertex_count(), 0);
  for (std::size_t j = 0; j < indices.size(); j++) {
    const auto& pattern = kOuterPatterns[indices[j]];
    const auto& triple = cfg_->triples[j];
    pre[triple.boundary] = pattern[0];
    pre[triple.p1] = pattern[1];
    pre[triple.p2] = pattern[2];
  }
  return pre;
}

bool PrecoloringStream::next(std::vector<int>& indices) const {
  for (int j = static_cast<int>(indices.size()) - 1; j >= 0; j--) {
    int range = j == 0 ? first_range_ : kOuterPatternCount;
    if (++indices[j] < range) return true;
    indices[j] = 0;
  }
  return false;
}

std::vector<int> PrecoloringStream::first_indices() const {
  return std::vector<int>(cfg_->triples.size(), 0);
}

bool precoloring_consistent(const Configuration& cfg, const Coloring& pre) {
  ConflictGraphs conflicts(cfg.extra, good_spec());
  for (int x = 0; x < cfg.extra.vertex_count(); x++) {
    int c = pre[x];
    if (c == 0) continue;
    for (int w : conflicts.for_color(c).neighbors(x)) {
      if (pre[w] == c) return false;
    }
  }
  return true;
}

namespace {

// Per-configuration state shared read-only across partition workers.
struct CheckContext {
  const Configuration* cfg;
  ConflictGraphs base_conflicts;   // extendability on the base graph
  ConflictGraphs extra_conflicts;  // precoloring consistency on the extra graph
  PrecoloringStream stream;
  int triple_count;
  int prefix_len;  // triples fixed by the partition index

  CheckContext(const Configuration& cfg, bool exhaustive_first)
      : cfg(&cfg),
        base_conflicts(cfg.base, good_spec()),
        extra_conflicts(cfg.extra, good_spec()),
        stream(cfg, exhaustive_first),
        triple_count(static_cast<int>(cfg.triples.size())),
        prefix_len(std::min(triple_count, 2)) {}

  void assign(Coloring& coloring, int j, int pattern_index) const {
    const auto& pattern = kOuterPatterns[pattern_index];
    const auto& triple = cfg->triples[j];
    coloring[triple.boundary] = pattern[0];
    coloring[triple.p1] = pattern[1];
    coloring[triple.p2] = pattern[2];
  }

  void unassign(Coloring& coloring, int j) const {
    const auto& triple = cfg->triples[j];
    coloring[triple.boundary] = 0;
    coloring[triple.p1] = 0;
    coloring[triple.p2] = 0;
  }

  // Whether triple j's freshly assigned colors conflict (under the extra
  // graph) with any colored vertex; earlier triples are already consistent.
  bool triple_conflicts(const Coloring& coloring, int j) const {
    const auto& triple = cfg->triples[j];
    for (int x : {triple.boundary, triple.p1, triple.p2}) {
      int c = coloring[x];
      for (int w : extra_conflicts.for_color(c).neighbors(x)) {
        if (w != x && coloring[w] == c) return true;
      }
    }
    return false;
  }
};

struct PartitionOutcome {
  CheckStats stats;  // pruned/extended counts for this partition only
  std::vector<CounterexampleWitness> witnesses;
};

struct ProgressState {
  std::uint64_t interval = 0;
  std::atomic<std::uint64_t> leaves{0};
};

// Depth-first over triples prefix_len..T-1 with subtree pruning: an
// inconsistent assignment skips (and counts) its whole subtree, exactly as
// the reference checker does.
bool descend(const CheckContext& ctx, Coloring& coloring, std::vector<int>& indices,
             int j, int witness_limit, PartitionOutcome& out, ProgressState* progress) {
  if (j >= ctx.triple_count) {
    if (progress && progress->interval) {
      std::uint64_t seen = ++progress->leaves;
      if (seen % progress->interval == 0) {
        std::ostringstream msg;
        msg << "progress cursor:";
        for (int idx : indices) msg << ' ' << idx;
        msg << '\n';
        std::cerr << msg.str();
      }
    }
    ExtendStats unused;
    if (extend(ctx.base_conflicts, coloring, &unused)) {
      out.stats.extended_ok++;
      return true;
    }
    out.witnesses.push_back({indices, coloring});
    return static_cast<int>(out.witnesses.size()) < witness_limit;
  }
  for (int pattern = 0; pattern < kOuterPatternCount; pattern++) {
    indices[j] = pattern;
    ctx.assign(coloring, j, pattern);
    if (ctx.triple_conflicts(coloring, j)) {
      out.stats.pruned_inconsistent += pow30(ctx.triple_count - 1 - j);
    } else if (!descend(ctx, coloring, indices, j + 1, witness_limit, out, progress)) {
      ctx.unassign(coloring, j);
      indices[j] = 0;
      return false;
    }
    ctx.unassign(coloring, j);
  }
  indices[j] = 0;
  return true;
}

PartitionOutcome check_partition(const CheckContext& ctx,
                                 const std::vector<int>& prefix, int witness_limit,
                                 ProgressState* progress) {
  PartitionOutcome out;
  Coloring coloring(ctx.cfg->base.vertex_count(), 0);
  std::vector<int> indices(ctx.triple_count, 0);
  for (int j = 0; j < ctx.prefix_len; j++) {
    indices[j] = prefix[j];
    ctx.assign(coloring, j, prefix[j]);
    if (ctx.triple_conflicts(coloring, j)) {
      // The whole partition subspace is inconsistent.
      out.stats.pruned_inconsistent = pow30(ctx.triple_count - ctx.prefix_len);
      return out;
    }
  }
  if (ctx.triple_count == 0) {
    // Single empty precoloring.
    ExtendStats unused;
    if (extend(ctx.base_conflicts, coloring, &unused)) {
      out.stats.extended_ok++;
    } else {
      out.witnesses.push_back({{}, coloring});
    }
    return out;
  }
  descend(ctx, coloring, indices, ctx.prefix_len, witness_limit, out, progress);
  return out;
}

std::vector<std::vector<int>> partition_prefixes(const CheckContext& ctx,
                                                 bool exhaustive_first) {
  int first_range = exhaustive_first ? kOuterPatternCount : kFirstTripleCount;
  std::vector<std::vector<int>> prefixes;
  if (ctx.prefix_len == 0) {
    prefixes.push_back({});
  } else if (ctx.prefix_len == 1) {
    for (int a = 0; a < first_range; a++) prefixes.push_back({a});
  } else {
    for (int a = 0; a < first_range; a++) {
      for (int b = 0; b < kOuterPatternCount; b++) prefixes.push_back({a, b});
    }
  }
  return prefixes;
}

bool cursor_precedes(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

ReducibilityResult check_reducible(const Configuration& cfg, const CheckOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  cfg.validate();
  CheckContext ctx(cfg, opts.exhaustive_first);

  ReducibilityResult result;
  result.name = cfg.name;
  result.stats.precolorings_total = ctx.stream.size();

  auto prefixes = partition_prefixes(ctx, opts.exhaustive_first);
  std::vector<PartitionOutcome> outcomes(prefixes.size());
  std::vector<char> ran(prefixes.size(), 0);

  ProgressState progress;
  progress.interval = opts.progress_interval;

  auto skip_partition = [&](std::size_t p) {
    if (!opts.resume_cursor) return false;
    const auto& cursor = *opts.resume_cursor;
    std::vector<int> prefix_cursor(cursor.begin(),
                                   cursor.begin() + std::min<std::size_t>(
                                                        cursor.size(), prefixes[p].size()));
    return cursor_precedes(prefixes[p], prefix_cursor);
  };

  int workers = std::max(1, opts.workers);
  std::atomic<std::size_t> next_partition{0};
  auto worker_loop = [&]() {
    for (;;) {
      std::size_t p = next_partition.fetch_add(1);
      if (p >= prefixes.size()) break;
      if (skip_partition(p)) continue;
      outcomes[p] = check_partition(ctx, prefixes[p], opts.witness_limit,
                                    progress.interval ? &progress : nullptr);
      ran[p] = 1;
    }
  };
  if (workers == 1) {
    worker_loop();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; w++) threads.emplace_back(worker_loop);
    for (auto& t : threads) t.join();
  }

  // Canonical-order merge: identical output regardless of scheduling.
  for (std::size_t p = 0; p < prefixes.size(); p++) {
    if (!ran[p]) continue;
    result.stats.pruned_inconsistent += outcomes[p].stats.pruned_inconsistent;
    result.stats.extended_ok += outcomes[p].stats.extended_ok;
    for (auto& witness : outcomes[p].witnesses) {
      if (static_cast<int>(result.witnesses.size()) < opts.witness_limit) {
        result.witnesses.push_back(std::move(witness));
      }
    }
  }
  result.reducible = result.witnesses.empty();
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<ReducibilityResult> check_file(const std::string& path,
                                           const CheckOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto configs = parse_config_file(buffer.str());
  std::vector<ReducibilityResult> results;
  results.reserve(configs.size());
  for (const auto& cfg : configs) results.push_back(check_reducible(cfg, opts));
  return results;
}

std::string format_result_lines(const ReducibilityResult& result) {
  std::ostringstream out;
  if (result.reducible) {
    out << "'" << result.name << "' Reducible\n";
  } else {
    for (const auto& witness : result.witnesses) {
      out << "Precoloring";
      for (int c : witness.precoloring) out << ' ' << c;
      out << " does not extend\n";
    }
  }
  return out.str();
}

std::string result_to_json(const ReducibilityResult& result, bool with_timing) {
  nlohmann::json j;
  j["name"] = result.name;
  j["verdict"] = result.reducible ? "reducible" : "counterexample";
  j["stats"] = {{"precolorings_total", result.stats.precolorings_total},
                {"pruned_inconsistent", result.stats.pruned_inconsistent},
                {"extended_ok", result.stats.extended_ok}};
  j["witnesses"] = nlohmann::json::array();
  for (const auto& witness : result.witnesses) {
    j["witnesses"].push_back({{"pattern_indices", witness.pattern_indices},
                              {"precoloring", witness.precoloring}});
  }
  j["seconds"] = with_timing ? result.seconds : 0.0;
  return j.dump(2);
}

}  // namespace pcol
