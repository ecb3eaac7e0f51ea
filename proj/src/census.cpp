#include "unipat/census.hpp"

#include <ostream>
#include <random>
#include <set>

#include "unipat/error.hpp"
#include "unipat/pattern_analysis.hpp"

namespace unipat {

std::vector<std::uint64_t> census_candidates(const CensusOptions& options) {
  const std::size_t n = options.n;
  if (n == 0) {
    throw PreconditionError("census: n must be >= 1");
  }
  if (options.sample == 0) {
    if (n > 3) {
      throw PreconditionError("census: exhaustive mode is limited to n <= 3; use sampling");
    }
    std::vector<std::uint64_t> codes(std::size_t{1} << (n * n));
    for (std::uint64_t c = 0; c < codes.size(); ++c) codes[c] = c;
    return codes;
  }
  if (n > 8) {
    throw PreconditionError("census: sampling is limited to n <= 8");
  }
  const std::uint64_t mask = n * n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n * n)) - 1;
  if (n * n < 64 && options.sample > mask + 1) {
    throw PreconditionError("census: sample exceeds the number of patterns");
  }
  std::mt19937_64 rng(options.seed);
  std::set<std::uint64_t> picked;
  while (picked.size() < options.sample) {
    picked.insert(rng() & mask);
  }
  return {picked.begin(), picked.end()};
}

CensusRow classify_pattern(const Pattern& p, const CensusOptions& options) {
  CensusRow row;
  row.code = p.code();
  row.pattern = p;
  row.quadrangular = is_quadrangular(p);
  row.strongly_quadrangular = is_strongly_quadrangular(p, SqOptions{options.oracle.sq_cap});
  const SpecularCheck spec = check_specular(p);
  row.specular = spec.specular;
  row.square_blocks = spec.specular && square_blocks(*spec.blocks);
  row.line_digraph = is_line_digraph(p);
  const Digraph d = digraph_of(p);
  row.degree_balanced = is_degree_balanced(d);
  row.strongly_connected = is_strongly_connected(d);
  if (options.run_oracle) {
    row.verdict = decide(p, options.oracle, Exec::serial);
  }
  return row;
}

Census run_census(const CensusOptions& options, Exec exec) {
  options.oracle.validate();
  const std::vector<std::uint64_t> codes = census_candidates(options);

  std::vector<std::optional<CensusRow>> slots(codes.size());
  auto work = [&](std::size_t k) {
    const Pattern p = Pattern::from_code(options.n, codes[k]);
    if (well_formed(p)) slots[k] = classify_pattern(p, options);
  };

  if (exec == Exec::parallel) {
    const auto count = static_cast<std::ptrdiff_t>(codes.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      work(static_cast<std::size_t>(k));
    }
  } else {
    for (std::size_t k = 0; k < codes.size(); ++k) work(k);
  }

  Census census{options.n, codes.size(), {}};
  for (auto& slot : slots) {
    if (slot) census.rows.push_back(std::move(*slot));
  }
  return census;
}

std::vector<std::string> census_violations(const Census& census) {
  std::vector<std::string> out;
  for (const CensusRow& row : census.rows) {
    const std::string tag = row.pattern.to_string() + ": ";
    if (row.strongly_quadrangular && !row.quadrangular) {
      out.push_back(tag + "strongly quadrangular but not quadrangular");
    }
    if (row.specular != row.line_digraph) {
      out.push_back(tag + "specular and line_digraph disagree");
    }
    if (row.verdict && std::holds_alternative<Feasible>(*row.verdict) && !row.strongly_quadrangular) {
      out.push_back(tag + "feasible verdict without strong quadrangularity");
    }
    if (row.verdict && row.specular && row.square_blocks && std::holds_alternative<Infeasible>(*row.verdict)) {
      out.push_back(tag + "specular with square blocks but infeasible");
    }
  }
  return out;
}

void write_census_csv(std::ostream& out, const Census& census) {
  out << "pattern,code,quadrangular,strongly_quadrangular,specular,square_blocks,line_digraph,"
         "degree_balanced,strongly_connected,verdict\n";
  for (const CensusRow& r : census.rows) {
    out << r.pattern.to_string() << ',' << r.code << ',' << r.quadrangular << ',' << r.strongly_quadrangular
        << ',' << r.specular << ',' << r.square_blocks << ',' << r.line_digraph << ',' << r.degree_balanced << ','
        << r.strongly_connected << ',' << (r.verdict ? verdict_kind(*r.verdict) : "skipped") << '\n';
  }
}

}  // namespace unipat
