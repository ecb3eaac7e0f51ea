#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "unipat/io.hpp"

namespace unipat::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kPrecondition = 3,
  kNoMethod = 4,
  kInvariantBreach = 5,
};

struct GlobalOptions {
  std::uint64_t seed = 0;
  double unitary_tol = 1e-10;
  double zero_tol = 1e-12;
  bool json = false;
  InputFormat format = InputFormat::auto_detect;
};

struct OracleOptions {
  std::size_t restarts = 32;
  std::size_t max_iters = 2000;
  double support_floor = 1e-3;
  double zero_tol = 1e-8;
};

struct AnalyzeArgs {
  std::string input;
  bool oracle = false;
  OracleOptions oracle_options;
};

struct SynthesizeArgs {
  std::string input;
  std::string method = "auto";  // auto | specular | coined
  bool line = false;
};

struct OracleArgs {
  std::string input;
  OracleOptions oracle_options;
};

struct EulerArgs {
  std::string input;
  bool lift = false;
  bool per_component = false;
};

struct WalkArgs {
  std::string input;
  std::size_t steps = 10;
  std::string start = "uniform";  // uniform | arc:<k>
  std::string group = "head";     // head | tail
};

struct CensusArgs {
  std::size_t n = 3;
  std::size_t sample = 0;
  bool no_oracle = false;
  OracleOptions oracle_options;
  std::string csv_path;      // empty: standard output
  std::string summary_path;  // empty: standard error
};

int cmd_analyze(const GlobalOptions& g, const AnalyzeArgs& a, std::ostream& out, std::ostream& err);
int cmd_synthesize(const GlobalOptions& g, const SynthesizeArgs& a, std::ostream& out, std::ostream& err);
int cmd_oracle(const GlobalOptions& g, const OracleArgs& a, std::ostream& out, std::ostream& err);
int cmd_linedigraph(const GlobalOptions& g, const std::string& input, std::ostream& out, std::ostream& err);
int cmd_euler(const GlobalOptions& g, const EulerArgs& a, std::ostream& out, std::ostream& err);
int cmd_walk(const GlobalOptions& g, const WalkArgs& a, std::ostream& out, std::ostream& err);
int cmd_census(const GlobalOptions& g, const CensusArgs& a, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to the commands above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unipat::cli
