#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "unipat/digraph.hpp"
#include "unipat/exec.hpp"
#include "unipat/oracle.hpp"

namespace unipat {

struct CensusOptions {
  std::size_t n = 3;
  /// 0 means exhaustive (n <= 3 only); otherwise the number of seeded
  /// random candidate codes drawn for 4 <= n <= 8.
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  bool run_oracle = true;
  OracleParams oracle;
};

struct CensusRow {
  std::uint64_t code = 0;  // bit (i*n + j) is entry (i,j)
  Pattern pattern{1};
  bool quadrangular = false;
  bool strongly_quadrangular = false;
  bool specular = false;
  bool square_blocks = false;  // false when not specular
  bool line_digraph = false;
  bool degree_balanced = false;
  bool strongly_connected = false;
  std::optional<Verdict> verdict;
};

struct Census {
  std::size_t n = 0;
  std::size_t candidates = 0;
  /// Well-formed patterns only, ascending by code.
  std::vector<CensusRow> rows;
};

/// Candidate codes in ascending order. Throws PreconditionError when the
/// size is too large for the requested mode.
std::vector<std::uint64_t> census_candidates(const CensusOptions& options);

/// Classifies one well-formed pattern; the oracle (if enabled) runs serially.
CensusRow classify_pattern(const Pattern& p, const CensusOptions& options);

/// Rows are classified independently; the parallel path distributes them
/// over OpenMP threads and yields the same rows in the same order.
Census run_census(const CensusOptions& options, Exec exec = Exec::parallel);

/// Broken hard invariants: Feasible with SQ false; specular with square
/// blocks but Infeasible; SQ without quadrangularity; specular != line digraph.
std::vector<std::string> census_violations(const Census& census);

/// Header `pattern,code,quadrangular,...,verdict`, one row per pattern.
void write_census_csv(std::ostream& out, const Census& census);

}  // namespace unipat
