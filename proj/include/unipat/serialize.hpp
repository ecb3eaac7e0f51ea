#pragma once

#include <json.hpp>

#include "unipat/analysis.hpp"
#include "unipat/census.hpp"
#include "unipat/digraph.hpp"
#include "unipat/euler.hpp"
#include "unipat/oracle.hpp"
#include "unipat/pattern_analysis.hpp"
#include "unipat/synthesis.hpp"

namespace unipat {

using Json = nlohmann::ordered_json;

Json to_json(const LinePair& pair);
Json to_json(const SqWitness& witness);
Json to_json(const SpecularBlocks& blocks);

/// { "n", "entries": row-major [re, im] pairs, "target_pattern": row strings,
///   "unitarity_residual", "support_exact", "min_on_support" }
Json to_json(const UnitaryCertificate& cert);

/// Discriminated by "kind": infeasible | feasible | unknown.
Json to_json(const Verdict& verdict);

Json to_json(const AnalysisReport& report);
Json to_json(const LineDigraph& ld);

/// Counts per verdict and per flag combination, plus invariant violations.
Json census_summary(const Census& census);

}  // namespace unipat
