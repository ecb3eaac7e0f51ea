#include "unipat/serialize.hpp"

#include <map>
#include <string>

namespace unipat {

namespace {

Json status_name(SqStatus s) {
  switch (s) {
    case SqStatus::holds:
      return "holds";
    case SqStatus::violated:
      return "violated";
    case SqStatus::undecided:
      return "undecided";
  }
  return "undecided";
}

}  // namespace

Json to_json(const LinePair& pair) {
  return Json{{"side", side_name(pair.side)}, {"first", pair.first}, {"second", pair.second}};
}

Json to_json(const SqWitness& witness) {
  return Json{{"side", side_name(witness.side)}, {"S", witness.members}, {"shared", witness.shared}};
}

Json to_json(const SpecularBlocks& blocks) {
  Json list = Json::array();
  for (const SpecularBlock& b : blocks.blocks) {
    list.push_back(Json{{"rows", b.rows}, {"cols", b.cols}});
  }
  return Json{{"blocks", std::move(list)}, {"independent", blocks.independent}};
}

Json to_json(const UnitaryCertificate& cert) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < cert.matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < cert.matrix.cols(); ++j) {
      entries.push_back(Json::array({cert.matrix(i, j).real(), cert.matrix(i, j).imag()}));
    }
  }
  return Json{{"n", cert.target.size()},
              {"entries", std::move(entries)},
              {"target_pattern", cert.target.rows()},
              {"unitarity_residual", cert.unitarity_residual},
              {"support_exact", cert.support_exact},
              {"min_on_support", cert.min_on_support}};
}

Json to_json(const Verdict& verdict) {
  Json j{{"kind", verdict_kind(verdict)}};
  if (const auto* inf = std::get_if<Infeasible>(&verdict)) {
    j["witness"] = to_json(inf->witness);
  } else if (const auto* fea = std::get_if<Feasible>(&verdict)) {
    j["restart"] = fea->restart;
    j["iterations"] = fea->iterations;
    j["certificate"] = to_json(fea->certificate);
  } else {
    const auto& unk = std::get<Unknown>(verdict);
    j["best_residual"] = unk.best_residual;
    j["best_min_on_support"] = unk.best_min_on_support;
  }
  return j;
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["vertices"] = r.vertices;
  j["arcs"] = r.arcs;
  j["well_formed"] = r.well_formed.ok;
  if (!r.well_formed.ok) j["offenders"] = r.well_formed.offenders;
  j["degree_balanced"] = r.degree_balanced;
  j["strongly_connected"] = r.strongly_connected;
  if (r.quadrangular) {
    j["quadrangular"] = r.quadrangular->quadrangular;
    if (r.quadrangular->violation) j["quadrangular_witness"] = to_json(*r.quadrangular->violation);
  }
  if (r.strongly_quadrangular) {
    const SqCheck& sq = *r.strongly_quadrangular;
    j["strongly_quadrangular"] = sq.status == SqStatus::undecided ? Json(nullptr) : Json(sq.status == SqStatus::holds);
    j["strongly_quadrangular_status"] = status_name(sq.status);
    if (sq.witness) j["strongly_quadrangular_witness"] = to_json(*sq.witness);
  }
  if (r.specular) {
    j["specular"] = r.specular->specular;
    if (r.specular->blocks) j["specular_blocks"] = to_json(*r.specular->blocks);
    if (r.specular->violation) j["specular_witness"] = to_json(*r.specular->violation);
  }
  if (r.square_blocks) j["square_blocks"] = *r.square_blocks;
  if (r.line_digraph) j["line_digraph"] = *r.line_digraph;
  if (r.verdict) j["verdict"] = to_json(*r.verdict);
  return j;
}

Json to_json(const LineDigraph& ld) {
  Json arcs = Json::array();
  for (const Arc& a : ld.digraph.arcs()) {
    arcs.push_back(Json::array({a.tail, a.head}));
  }
  Json labels = Json::array();
  for (const LabeledArc& l : ld.labeling) {
    labels.push_back(Json{{"vertex", l.id}, {"tail", l.tail}, {"head", l.head}});
  }
  return Json{{"n", ld.digraph.vertex_count()}, {"arcs", std::move(arcs)}, {"labeling", std::move(labels)}};
}

Json census_summary(const Census& census) {
  std::map<std::string, std::size_t> verdicts;
  std::map<std::string, std::size_t> combos;
  for (const CensusRow& r : census.rows) {
    const std::string kind = r.verdict ? std::string(verdict_kind(*r.verdict)) : "skipped";
    ++verdicts[kind];
    const std::string key = "quadrangular=" + std::to_string(r.quadrangular) +
                            ",strongly_quadrangular=" + std::to_string(r.strongly_quadrangular) +
                            ",specular=" + std::to_string(r.specular) +
                            ",square_blocks=" + std::to_string(r.square_blocks) + ",verdict=" + kind;
    ++combos[key];
  }
  Json j;
  j["n"] = census.n;
  j["candidates"] = census.candidates;
  j["well_formed"] = census.rows.size();
  j["verdicts"] = verdicts;
  j["combinations"] = combos;
  j["violations"] = census_violations(census);
  return j;
}

}  // namespace unipat
