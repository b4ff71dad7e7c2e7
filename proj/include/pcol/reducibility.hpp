#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcol/config.hpp"
#include "pcol/solver.hpp"

namespace pcol {

struct CheckOptions {
  /// Try all 30 patterns on the first triple instead of the first 2.
  bool exhaustive_first = false;
  /// Stop collecting counterexample witnesses after this many.
  int witness_limit = 1;
  /// Worker threads; partitions are merged in canonical order so the
  /// result is identical for any count.
  int workers = 1;
  /// Emit a resumable cursor to stderr every this many precolorings
  /// (0 disables).
  std::uint64_t progress_interval = 0;
  /// Skip precolorings whose pattern-index vector precedes this cursor.
  std::optional<std::vector<int>> resume_cursor;
};

struct CheckStats {
  std::uint64_t precolorings_total = 0;
  std::uint64_t pruned_inconsistent = 0;
  std::uint64_t extended_ok = 0;
};

struct CounterexampleWitness {
  std::vector<int> pattern_indices;  // one pattern index per triple
  Coloring precoloring;
};

struct ReducibilityResult {
  std::string name;
  bool reducible = false;
  std::vector<CounterexampleWitness> witnesses;  // enumeration order
  CheckStats stats;
  double seconds = 0.0;
};

/// Deterministic stream of pendant precolorings: the Cartesian product over
/// triples (in list order) of pattern-table entries (in table order); the
/// first triple ranges over kFirstTripleCount patterns unless exhaustive.
/// A configuration with no triples yields one all-uncolored precoloring.
class PrecoloringStream {
 public:
  PrecoloringStream(const Configuration& cfg, bool exhaustive_first);

  std::uint64_t size() const { return total_; }

  /// Precoloring for a pattern-index vector (one index per triple).
  Coloring precoloring(const std::vector<int>& indices) const;

  /// Advances the index vector in enumeration order; false when exhausted.
  bool next(std::vector<int>& indices) const;

  std::vector<int> first_indices() const;

 private:
  const Configuration* cfg_;
  int first_range_;
  std::uint64_t total_;
};

/// True iff no two same-colored pendant vertices conflict under the EXTRA
/// graph's distance classes (radius 1 for color 1, radius 2 otherwise).
bool precoloring_consistent(const Configuration& cfg, const Coloring& pre);

/// The checker: every consistent precoloring must extend on the BASE graph
/// under spec (1,2,2,2,2,2); inconsistent precolorings are skipped and
/// counted as vacuously satisfied. Stats cover the full enumeration space
/// so reports are identical for any worker count.
ReducibilityResult check_reducible(const Configuration& cfg, const CheckOptions& opts = {});

/// One result per record of the file, in order.
std::vector<ReducibilityResult> check_file(const std::string& path,
                                           const CheckOptions& opts = {});

/// The checker's line-oriented output: `'<name>' Reducible` or the list of
/// non-extendable precolorings.
std::string format_result_lines(const ReducibilityResult& result);

/// JSON report (name, verdict, stats, witnesses, seconds). `with_timing`
/// off zeroes the seconds field for byte-stable comparisons.
std::string result_to_json(const ReducibilityResult& result, bool with_timing = true);

}  // namespace pcol
