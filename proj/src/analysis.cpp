#include "unipat/analysis.hpp"

namespace unipat {

AnalysisReport analyze(const Digraph& d, const AnalyzeOptions& options) {
  AnalysisReport r;
  r.vertices = d.vertex_count();
  r.arcs = d.arc_count();
  r.degree_balanced = is_degree_balanced(d);
  r.strongly_connected = is_strongly_connected(d);

  const Pattern p = pattern_of(d);
  r.well_formed = well_formed(p);
  if (!r.well_formed) return r;

  r.quadrangular = check_quadrangular(p);
  r.strongly_quadrangular = check_strongly_quadrangular(p, options.sq);
  r.specular = check_specular(p);
  r.line_digraph = is_line_digraph(p);
  if (r.specular->specular) {
    r.square_blocks = square_blocks(*r.specular->blocks);
  }
  if (options.run_oracle) {
    OracleParams params = options.oracle;
    params.sq_cap = options.sq.cap;
    r.verdict = decide(p, params, options.exec);
  }
  return r;
}

std::vector<std::string> consistency_problems(const AnalysisReport& report) {
  std::vector<std::string> problems;
  if (report.strongly_quadrangular && report.quadrangular &&
      report.strongly_quadrangular->status == SqStatus::holds && !report.quadrangular->quadrangular) {
    problems.emplace_back("strongly quadrangular but not quadrangular");
  }
  if (report.specular && report.line_digraph && report.specular->specular != *report.line_digraph) {
    problems.emplace_back("specular and line_digraph disagree");
  }
  if (report.verdict && report.strongly_quadrangular &&
      std::holds_alternative<Feasible>(*report.verdict) &&
      report.strongly_quadrangular->status == SqStatus::violated) {
    problems.emplace_back("feasible verdict on a pattern that is not strongly quadrangular");
  }
  return problems;
}

}  // namespace unipat
