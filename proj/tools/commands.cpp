#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <ostream>

#include <CLI11.hpp>

#include "unipat/analysis.hpp"
#include "unipat/census.hpp"
#include "unipat/error.hpp"
#include "unipat/euler.hpp"
#include "unipat/oracle.hpp"
#include "unipat/serialize.hpp"
#include "unipat/synthesis.hpp"
#include "unipat/walk.hpp"

namespace unipat::cli {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kPrecondition;
  }
}

OracleParams oracle_params(const GlobalOptions& g, const OracleOptions& o) {
  OracleParams p;
  p.restarts = o.restarts;
  p.max_iters = o.max_iters;
  p.support_floor = o.support_floor;
  p.zero_tol = o.zero_tol;
  p.unitary_tol = g.unitary_tol;
  p.seed = g.seed;
  return p;
}

Tolerances tolerances(const GlobalOptions& g) { return {g.unitary_tol, g.zero_tol}; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", p);
  return buf;
}

}  // namespace

int cmd_analyze(const GlobalOptions& g, const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ParsedInput in = read_input_file(a.input, g.format);
    AnalyzeOptions options;
    options.run_oracle = a.oracle;
    options.oracle = oracle_params(g, a.oracle_options);
    const AnalysisReport report = analyze(in.digraph, options);
    emit(out, to_json(report));
    if (!report.well_formed) {
      err << "pattern is not well-formed (zero row or column)\n";
      return int{kPrecondition};
    }
    for (const std::string& p : consistency_problems(report)) {
      err << "inconsistent report: " << p << '\n';
      return int{kInvariantBreach};
    }
    return int{kOk};
  });
}

int cmd_synthesize(const GlobalOptions& g, const SynthesizeArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (a.method != "auto" && a.method != "specular" && a.method != "coined") {
      err << "unknown method '" << a.method << "'\n";
      return int{kParseError};
    }
    const ParsedInput in = read_input_file(a.input, g.format);
    const Pattern p = pattern_of(in.digraph);
    const Tolerances tol = tolerances(g);
    std::vector<std::string> reasons;

    if (a.method == "auto" || a.method == "specular") {
      try {
        const UnitaryCertificate cert = synthesize_specular(p, tol);
        emit(out, Json{{"method", "specular"}, {"certificate", to_json(cert)}});
        return int{kOk};
      } catch (const PreconditionError& e) {
        reasons.push_back(std::string("specular: ") + e.what());
      }
    }
    if (a.method == "coined" || (a.method == "auto" && a.line)) {
      try {
        const CoinedSynthesis coined = synthesize_coined(in.digraph, {}, tol);
        Json labels = Json::array();
        for (const LabeledArc& l : coined.labeling) {
          labels.push_back(Json{{"vertex", l.id}, {"tail", l.tail}, {"head", l.head}});
        }
        emit(out, Json{{"method", "coined"}, {"certificate", to_json(coined.certificate)}, {"labeling", labels}});
        return int{kOk};
      } catch (const PreconditionError& e) {
        reasons.push_back(std::string("coined: ") + e.what());
      }
    }

    Json failure{{"error", "no synthesis method applies"}, {"reasons", reasons}};
    if (well_formed(p)) {
      const SqCheck sq = check_strongly_quadrangular(p);
      if (sq.witness) failure["strongly_quadrangular_witness"] = to_json(*sq.witness);
    }
    emit(out, failure);
    for (const std::string& r : reasons) err << r << '\n';
    return int{kNoMethod};
  });
}

int cmd_oracle(const GlobalOptions& g, const OracleArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ParsedInput in = read_input_file(a.input, g.format);
    const Verdict v = decide(pattern_of(in.digraph), oracle_params(g, a.oracle_options));
    emit(out, to_json(v));
    return int{kOk};
  });
}

int cmd_linedigraph(const GlobalOptions& g, const std::string& input, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ParsedInput in = read_input_file(input, g.format);
    const LineDigraph ld = line_digraph(in.digraph);
    if (g.json) {
      emit(out, to_json(ld));
    } else {
      out << "# line digraph; vertex k is arc k of the input\n";
      write_edge_list(out, ld.digraph);
    }
    return int{kOk};
  });
}

int cmd_euler(const GlobalOptions& g, const EulerArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ParsedInput in = read_input_file(a.input, g.format);
    if (a.per_component) {
      emit(out, Json(euler_circuits_per_component(in.digraph)));
    } else if (a.lift) {
      emit(out, Json(hamiltonian_cycle_in_line_digraph(in.digraph)));
    } else {
      emit(out, Json(euler_circuit(in.digraph)));
    }
    return int{kOk};
  });
}

int cmd_walk(const GlobalOptions& g, const WalkArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    WalkConfig config;
    config.tolerances = tolerances(g);
    if (a.start == "uniform") {
      config.start = StartMode::uniform();
    } else if (a.start.rfind("arc:", 0) == 0) {
      std::size_t pos = 0;
      std::size_t arc = 0;
      try {
        arc = std::stoul(a.start.substr(4), &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || pos != a.start.size() - 4) {
        err << "bad --start '" << a.start << "'\n";
        return int{kParseError};
      }
      config.start = StartMode::delta(arc);
    } else {
      err << "bad --start '" << a.start << "' (expected uniform or arc:<k>)\n";
      return int{kParseError};
    }
    if (a.group == "head") {
      config.grouping = Grouping::head;
    } else if (a.group == "tail") {
      config.grouping = Grouping::tail;
    } else {
      err << "bad --group '" << a.group << "' (expected head or tail)\n";
      return int{kParseError};
    }

    const ParsedInput in = read_input_file(a.input, g.format);
    const auto series = run(in.digraph, a.steps, config);
    out << "step";
    for (std::size_t v = 0; v < in.digraph.vertex_count(); ++v) out << ",v" << v;
    out << '\n';
    for (std::size_t t = 0; t < series.size(); ++t) {
      out << t;
      for (double p : series[t].probabilities) out << ',' << format_probability(p);
      out << '\n';
    }
    return int{kOk};
  });
}

int cmd_census(const GlobalOptions& g, const CensusArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    CensusOptions options;
    options.n = a.n;
    options.sample = a.sample;
    options.seed = g.seed;
    options.run_oracle = !a.no_oracle;
    options.oracle = oracle_params(g, a.oracle_options);
    const Census census = run_census(options);

    if (a.csv_path.empty()) {
      write_census_csv(out, census);
    } else {
      std::ofstream f(a.csv_path);
      if (!f) throw ParseError(0, "cannot write " + a.csv_path);
      write_census_csv(f, census);
    }
    const Json summary = census_summary(census);
    if (a.summary_path.empty()) {
      err << summary.dump(2) << '\n';
    } else {
      std::ofstream f(a.summary_path);
      if (!f) throw ParseError(0, "cannot write " + a.summary_path);
      f << summary.dump(2) << '\n';
    }
    if (!summary["violations"].empty()) {
      err << "census invariant violated\n";
      return int{kInvariantBreach};
    }
    return int{kOk};
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digraphs of unitary matrices: analysis, synthesis, oracle, walks"};
  app.require_subcommand(1);

  GlobalOptions g;
  std::string format = "auto";
  app.add_option("--seed", g.seed, "Seed for the oracle and census sampling");
  app.add_option("--unitary-tol", g.unitary_tol, "Unitarity tolerance");
  app.add_option("--zero-tol", g.zero_tol, "Zero threshold for synthesized certificates");
  app.add_flag("--json", g.json, "JSON output where a text form also exists");
  app.add_option("--format", format, "Input format")->check(CLI::IsMember({"auto", "edges", "pattern"}));

  auto add_oracle_options = [](CLI::App* sub, OracleOptions& o) {
    sub->add_option("--restarts", o.restarts, "Oracle restarts");
    sub->add_option("--max-iters", o.max_iters, "Iterations per restart");
    sub->add_option("--support-floor", o.support_floor, "Minimum on-pattern modulus while iterating");
    sub->add_option("--oracle-zero-tol", o.zero_tol, "Zero threshold for oracle certificates");
  };

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Combinatorial report for a digraph or pattern");
  analyze_cmd->add_option("input", analyze_args.input)->required();
  analyze_cmd->add_flag("--oracle", analyze_args.oracle, "Also run the feasibility oracle");
  add_oracle_options(analyze_cmd, analyze_args.oracle_options);

  SynthesizeArgs synth_args;
  auto* synth_cmd = app.add_subcommand("synthesize", "Build a unitary with the given support");
  synth_cmd->add_option("input", synth_args.input)->required();
  synth_cmd->add_option("--method", synth_args.method)->check(CLI::IsMember({"auto", "specular", "coined"}));
  synth_cmd->add_flag("--line", synth_args.line, "In auto mode, fall back to the coined unitary on L(D)");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Decide whether the pattern supports a unitary");
  oracle_cmd->add_option("input", oracle_args.input)->required();
  add_oracle_options(oracle_cmd, oracle_args.oracle_options);

  std::string line_input;
  auto* line_cmd = app.add_subcommand("linedigraph", "Print the line digraph");
  line_cmd->add_option("input", line_input)->required();

  EulerArgs euler_args;
  auto* euler_cmd = app.add_subcommand("euler", "Euler circuit (or lifted Hamiltonian cycle of L(D))");
  euler_cmd->add_option("input", euler_args.input)->required();
  euler_cmd->add_flag("--lift", euler_args.lift, "Print the Hamiltonian cycle of L(D)");
  euler_cmd->add_flag("--per-component", euler_args.per_component, "One circuit per strong component");

  WalkArgs walk_args;
  auto* walk_cmd = app.add_subcommand("walk", "Coined quantum walk; CSV of vertex distributions");
  walk_cmd->add_option("input", walk_args.input)->required();
  walk_cmd->add_option("--steps", walk_args.steps);
  walk_cmd->add_option("--start", walk_args.start, "uniform or arc:<k>");
  walk_cmd->add_option("--group", walk_args.group, "head or tail");

  CensusArgs census_args;
  auto* census_cmd = app.add_subcommand("census", "Classify every well-formed n x n pattern");
  census_cmd->add_option("--n", census_args.n);
  census_cmd->add_option("--sample", census_args.sample, "Seeded sample size (n >= 4)");
  census_cmd->add_flag("--no-oracle", census_args.no_oracle);
  census_cmd->add_option("--csv", census_args.csv_path);
  census_cmd->add_option("--summary", census_args.summary_path);
  add_oracle_options(census_cmd, census_args.oracle_options);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParseError;
  }

  if (format == "edges") g.format = InputFormat::edges;
  if (format == "pattern") g.format = InputFormat::pattern;

  if (*analyze_cmd) return cmd_analyze(g, analyze_args, out, err);
  if (*synth_cmd) return cmd_synthesize(g, synth_args, out, err);
  if (*oracle_cmd) return cmd_oracle(g, oracle_args, out, err);
  if (*line_cmd) return cmd_linedigraph(g, line_input, out, err);
  if (*euler_cmd) return cmd_euler(g, euler_args, out, err);
  if (*walk_cmd) return cmd_walk(g, walk_args, out, err);
  if (*census_cmd) return cmd_census(g, census_args, out, err);
  return kParseError;
}

}  // namespace unipat::cli
