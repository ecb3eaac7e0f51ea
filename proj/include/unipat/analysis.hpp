#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unipat/digraph.hpp"
#include "unipat/exec.hpp"
#include "unipat/oracle.hpp"
#include "unipat/pattern_analysis.hpp"

namespace unipat {

struct AnalyzeOptions {
  SqOptions sq;
  bool run_oracle = false;
  OracleParams oracle;
  Exec exec = Exec::parallel;
};

/// Everything the library can say about one digraph. The pattern fields are
/// only filled when the pattern is well-formed.
struct AnalysisReport {
  std::size_t vertices = 0;
  std::size_t arcs = 0;
  WellFormedness well_formed{false, {}};
  bool degree_balanced = false;
  bool strongly_connected = false;
  std::optional<QuadrangularCheck> quadrangular;
  std::optional<SqCheck> strongly_quadrangular;
  std::optional<SpecularCheck> specular;
  std::optional<bool> square_blocks;
  std::optional<bool> line_digraph;
  std::optional<Verdict> verdict;
};

AnalysisReport analyze(const Digraph& d, const AnalyzeOptions& options = {});

/// Human-readable descriptions of broken cross-flag invariants
/// (SQ => quadrangular, specular <=> line digraph). Empty when consistent.
std::vector<std::string> consistency_problems(const AnalysisReport& report);

}  // namespace unipat
