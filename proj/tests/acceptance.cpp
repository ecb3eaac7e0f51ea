// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// `acceptance N` runs criterion N alone.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "unipat/census.hpp"
#include "unipat/error.hpp"
#include "unipat/euler.hpp"
#include "unipat/io.hpp"
#include "unipat/oracle.hpp"
#include "unipat/serialize.hpp"
#include "unipat/synthesis.hpp"
#include "unipat/walk.hpp"

using namespace unipat;
using namespace unipat::testing;

namespace {

/// Collects failure notes; a criterion passes when none were recorded.
class Report {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& line) { notes_.push_back(line); }
  bool ok() const { return failures_.empty(); }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0: no limit
  std::function<void(Report&)> body;
};

std::string fixture(const std::string& name) { return std::string(UNIPAT_FIXTURES) + "/" + name; }

// Recomputes unitarity and support from the raw matrix.
bool certificate_holds(const ComplexMatrix& u, const Pattern& p, double unitary_tol, double zero_tol) {
  const auto n = static_cast<Eigen::Index>(p.size());
  if (u.rows() != n || u.cols() != n) return false;
  const ComplexMatrix gram = u.adjoint() * u;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex expected = i == j ? Complex(1.0) : Complex(0.0);
      if (std::abs(gram(i, j) - expected) > unitary_tol) return false;
      const bool nonzero = std::abs(u(i, j)) > zero_tol;
      if (nonzero != p.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) return false;
    }
  }
  return true;
}

bool infeasible_with_valid_witness(const Pattern& p, const Verdict& v) {
  const auto* inf = std::get_if<Infeasible>(&v);
  return inf && witness_holds(p, inf->witness.side, inf->witness.members, inf->witness.shared);
}

std::string describe(const Pattern& p) { return p.to_string(); }

// 1. Fixture facts.
void fixtures(Report& r) {
  r.check(!is_quadrangular(triangle()), "triangle should not be quadrangular");
  r.check(is_quadrangular(remark4()), "4x4 counterexample should be quadrangular");
  r.check(!is_strongly_quadrangular(remark4()), "4x4 counterexample should not be strongly quadrangular");
  r.check(!is_quadrangular(pattern_of(generate(Family::petersen, 0))), "Petersen should not be quadrangular");

  const Digraph d = eulerian_remark();
  r.check(pattern_of(d) == Pattern::from_rows({"11", "10"}), "M(D) should be [[1,1],[1,0]]");
  const LineDigraph ld = line_digraph(d);
  r.check(permutation_equivalence(pattern_of(ld.digraph), displayed_line_pattern()).has_value(),
          "L(D) should be permutation equivalent to [[0,0,1],[1,1,0],[1,1,0]]");
  const CoinedSynthesis coined = synthesize_coined(d);
  r.check(coined.certificate.valid(), "coined certificate for D should be valid");
  r.check(!is_degree_balanced(ld.digraph), "L(D) should not be degree-balanced");

  // The same facts read from the fixture files.
  r.check(pattern_of(read_input_file(fixture("triangle.txt")).digraph) == triangle(), "triangle fixture");
  r.check(pattern_of(read_input_file(fixture("remark4.txt")).digraph) == remark4(), "remark4 fixture");
  r.check(!is_quadrangular(pattern_of(read_input_file(fixture("petersen.edges")).digraph)), "petersen fixture");
  r.check(read_input_file(fixture("eulerian_remark.edges")).digraph == d, "eulerian fixture");
}

void check_coined_equivalence(Report& r, const Digraph& d, std::size_t& balanced) {
  const bool is_balanced = is_degree_balanced(d);
  std::ostringstream name;
  write_edge_list(name, d);
  try {
    const CoinedSynthesis s = synthesize_coined(d);
    ++balanced;
    const Pattern target = pattern_of(line_digraph(d).digraph);
    r.check(is_balanced, "synthesis succeeded on an unbalanced digraph:\n" + name.str());
    r.check(s.certificate.unitarity_residual <= 1e-10, "residual above 1e-10:\n" + name.str());
    r.check(s.certificate.support_exact && s.certificate.target == target, "support mismatch:\n" + name.str());
    r.check(certificate_holds(s.certificate.matrix, target, 1e-10, 1e-12), "independent recheck failed:\n" + name.str());
  } catch (const PreconditionError&) {
    r.check(!is_balanced, "synthesis refused a balanced digraph:\n" + name.str());
  }
}

// 2. Coined synthesis succeeds exactly on degree-balanced digraphs.
void coined_equivalence(Report& r) {
  std::size_t total = 0, balanced = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 6; ++k) {
      for_each_multidigraph(n, k, [&](const Digraph& d) {
        ++total;
        check_coined_equivalence(r, d, balanced);
      });
    }
  }
  r.note("exhaustive: " + std::to_string(total) + " digraphs, " + std::to_string(balanced) + " balanced");

  // Half arbitrary (mostly unbalanced), half drawn from balanced generators.
  std::size_t random_balanced = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t n = 1 + seed % 6;
    if (seed % 2 == 0) {
      check_coined_equivalence(r, random_digraph(n, 1 + (seed / 2) % 12, seed), random_balanced);
    } else {
      check_coined_equivalence(r, generate(Family::random_balanced, n, {seed, 12}), random_balanced);
    }
  }
  r.note("random: 500 digraphs, " + std::to_string(random_balanced) + " balanced");
}

// 3. No Feasible verdict without strong quadrangularity over the 3x3 census.
void census_lemma(Report& r) {
  const Census c = run_census({});
  r.check(c.candidates == 512, "census should see 512 candidates");
  r.check(c.rows.size() == 265, "census should classify 265 well-formed patterns");
  std::size_t feasible = 0;
  for (const CensusRow& row : c.rows) {
    if (!row.verdict) {
      r.check(false, "missing verdict for " + describe(row.pattern));
      continue;
    }
    const bool is_feasible = std::holds_alternative<Feasible>(*row.verdict);
    feasible += is_feasible;
    r.check(!(is_feasible && !row.strongly_quadrangular), "feasible without SQ: " + describe(row.pattern));
  }
  for (const std::string& v : census_violations(c)) r.check(false, v);
  r.note("feasible " + std::to_string(feasible) + " of " + std::to_string(c.rows.size()));
}

// 4. Specular patterns with square blocks get Fourier-block certificates.
void specular_ladder(Report& r) {
  std::set<std::pair<std::size_t, std::uint64_t>> seen;
  std::vector<Pattern> patterns;
  auto add = [&](const Pattern& p) {
    if (p.size() > 6 || !well_formed(p)) return;
    const SpecularCheck s = check_specular(p);
    if (!s.specular || !square_blocks(*s.blocks)) return;
    if (seen.insert({p.size(), p.code()}).second) patterns.push_back(p);
  };
  for (const CensusRow& row : run_census({2, 0, 0, false, {}}).rows) add(row.pattern);
  for (const CensusRow& row : run_census({3, 0, 0, false, {}}).rows) add(row.pattern);
  for (std::size_t n = 1; n <= 6; ++n) {
    add(all_ones(n));
    add(identity_pattern(n));
  }
  add(c4_pattern());
  for (std::size_t r2 = 1; r2 <= 3; ++r2) add(pattern_of(generate(Family::ladder, r2)));
  add(pattern_of(read_input_file(fixture("c4.txt")).digraph));
  add(pattern_of(read_input_file(fixture("complete3.txt")).digraph));
  // Line digraphs of balanced digraphs with at most 6 arcs.
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 6; ++k) {
      for_each_multidigraph(n, k, [&](const Digraph& d) {
        if (is_degree_balanced(d)) add(pattern_of(line_digraph(d).digraph));
      });
    }
  }

  for (const Pattern& p : patterns) {
    const UnitaryCertificate c = synthesize_specular(p);
    r.check(c.valid() && c.unitarity_residual <= 1e-12, "specular certificate invalid for " + describe(p));
    r.check(certificate_holds(c.matrix, p, 1e-12, 1e-12), "independent recheck failed for " + describe(p));
    const Verdict v = decide(p);
    r.check(std::holds_alternative<Feasible>(v), std::string("oracle said ") + std::string(verdict_kind(v)) +
                                                     " for " + describe(p));
  }
  r.note(std::to_string(patterns.size()) + " distinct specular patterns with square blocks");
}

// 5. NO-GO families produce witness-backed Infeasible verdicts.
void no_go(Report& r) {
  std::size_t backed = 0, total = 0;
  auto expect_infeasible = [&](const std::string& label, const Digraph& d) {
    ++total;
    const Pattern p = pattern_of(d);
    try {
      const bool ok = infeasible_with_valid_witness(p, decide(p));
      backed += ok;
      r.check(ok, label + ": no witness-backed Infeasible verdict");
    } catch (const PreconditionError& e) {
      r.check(false, label + ": " + e.what());
    }
  };

  for (std::size_t n = 3; n <= 10; ++n) expect_infeasible("n-path n=" + std::to_string(n), generate(Family::n_path, n));
  for (std::size_t n = 3; n <= 8; ++n) {
    expect_infeasible("n-path with loops n=" + std::to_string(n), generate(Family::n_path_loops, n));
  }
  for (std::size_t n : {3, 5, 6, 7, 8}) expect_infeasible("cycle n=" + std::to_string(n), generate(Family::cycle, n));

  std::size_t directed_backed = 0, directed_sinks = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 3 + seed % 6;
    expect_infeasible("tree seed=" + std::to_string(seed), generate(Family::random_tree, n, {seed, 0}));

    const Digraph dt = generate(Family::random_directed_tree, n, {seed, 0});
    const std::size_t before = backed;
    expect_infeasible("directed tree seed=" + std::to_string(seed), dt);
    directed_backed += backed - before;
    bool has_sink = false;
    for (Vertex v = 0; v < n; ++v) has_sink = has_sink || degrees(dt, v).out == 0;
    directed_sinks += has_sink;
  }
  r.note("directed trees: " + std::to_string(directed_backed) + "/20 witness-backed; " +
         std::to_string(directed_sinks) + "/20 have a sink (zero row), which the oracle rejects as not well-formed");

  const Verdict c4 = decide(pattern_of(generate(Family::cycle, 4)));
  r.check(std::holds_alternative<Feasible>(c4), "bidirected 4-cycle should be Feasible");
  r.note(std::to_string(backed) + "/" + std::to_string(total) + " NO-GO instances witness-backed; C4 " +
         std::string(verdict_kind(c4)));
}

// 6. Euler circuits lift to Hamiltonian cycles of the line digraph.
void euler_hamilton(Report& r) {
  std::size_t done = 0;
  for (std::uint64_t seed = 0; done < 200; ++seed) {
    const Digraph d = generate(Family::random_balanced, 1 + seed % 8, {seed, 20});
    if (d.arc_count() > 20 || !is_strongly_connected(d) || !is_degree_balanced(d)) {
      r.check(false, "generator produced an unusable digraph at seed " + std::to_string(seed));
      continue;
    }
    ++done;
    const HamiltonianCycle h = hamiltonian_cycle_in_line_digraph(d);
    const Digraph ld = line_digraph(d).digraph;
    r.check(verify_hamiltonian_cycle(ld, h), "seed " + std::to_string(seed) + ": lifted cycle rejected");
    // Independent check on the raw arc list: consecutive arcs chain head to tail.
    bool chains = h.size() == d.arc_count();
    for (std::size_t k = 0; chains && k < h.size(); ++k) {
      chains = d.arc(h[k]).head == d.arc(h[(k + 1) % h.size()]).tail;
    }
    r.check(chains && std::set<Vertex>(h.begin(), h.end()).size() == h.size(),
            "seed " + std::to_string(seed) + ": lifted cycle is not an arc ordering");
  }
}

// 7. Walks conserve probability; directed cycles rotate a point mass.
void walk_conservation(Report& r) {
  const std::vector<std::pair<std::string, Digraph>> cases{
      {"eulerian remark", eulerian_remark()},
      {"directed 3-cycle", generate(Family::directed_cycle, 3)},
      {"directed 4-cycle", read_input_file(fixture("directed_cycle4.edges")).digraph},
      {"directed 7-cycle", generate(Family::directed_cycle, 7)},
      {"complete 2", generate(Family::complete, 2)},
      {"complete 3", read_input_file(fixture("complete3.txt")).digraph},
      {"3-path", read_input_file(fixture("n_path3.edges")).digraph},
      {"4-cycle", generate(Family::cycle, 4)},
      {"petersen", read_input_file(fixture("petersen.edges")).digraph},
      {"random balanced", generate(Family::random_balanced, 6, {17, 0})},
  };
  const std::size_t steps = 1000;
  for (const auto& [label, d] : cases) {
    const ComplexMatrix u = synthesize_coined(d).certificate.matrix;
    WalkState s = init_state(d, StartMode::uniform());
    double drift = 0.0;
    for (std::size_t t = 0; t < steps; ++t) {
      s = step(u, s);
      drift = std::max(drift, std::abs(s.norm() - 1.0));
    }
    r.check(drift <= 1e-9, label + ": norm drift " + std::to_string(drift));

    for (const StartMode mode : {StartMode::uniform(), StartMode::delta(0)}) {
      WalkConfig config;
      config.start = mode;
      const auto series = run(d, steps, config);
      r.check(series.size() == steps + 1, label + ": wrong series length");
      for (const auto& dist : series) {
        if (std::abs(dist.total() - 1.0) > 1e-9) {
          r.check(false, label + ": distribution total " + std::to_string(dist.total()));
          break;
        }
      }
    }
  }

  for (std::size_t n : {3, 4, 7}) {
    const Digraph d = generate(Family::directed_cycle, n);
    WalkConfig config;
    config.start = StartMode::delta(0);
    const auto series = run(d, steps, config);
    bool exact = true;
    for (std::size_t t = 0; t < series.size(); ++t) {
      for (std::size_t v = 0; v < n; ++v) {
        exact = exact && series[t].probabilities[v] == (v == (t + 1) % n ? 1.0 : 0.0);
      }
    }
    r.check(exact, "directed " + std::to_string(n) + "-cycle: not a rotating point mass");
  }
}

// 8. Oracle soundness and determinism.
void oracle_soundness(Report& r) {
  std::vector<Pattern> patterns;
  for (const CensusRow& row : run_census({3, 0, 0, false, {}}).rows) patterns.push_back(row.pattern);
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 60; ++k) {
    const Pattern p = random_pattern(4 + k % 3, 0.6, rng);
    if (well_formed(p)) patterns.push_back(p);
  }
  patterns.push_back(c4_pattern());
  patterns.push_back(remark4());
  patterns.push_back(all_ones(5));

  std::size_t feasible = 0, infeasible = 0, unknown = 0;
  OracleParams params;
  params.seed = 7;
  for (const Pattern& p : patterns) {
    const Verdict a = decide(p, params);
    if (const auto* f = std::get_if<Feasible>(&a)) {
      ++feasible;
      r.check(certificate_holds(f->certificate.matrix, p, params.unitary_tol, params.zero_tol),
              "certificate does not re-verify for " + describe(p));
    } else if (std::holds_alternative<Infeasible>(a)) {
      ++infeasible;
      r.check(infeasible_with_valid_witness(p, a), "witness does not re-validate for " + describe(p));
    } else {
      ++unknown;
    }
    const std::string first = to_json(a).dump(2);
    const std::string second = to_json(decide(p, params)).dump(2);
    const std::string serial = to_json(decide(p, params, Exec::serial)).dump(2);
    r.check(first == second && first == serial, "JSON differs between identical runs for " + describe(p));
  }
  r.note(std::to_string(patterns.size()) + " patterns: " + std::to_string(feasible) + " feasible, " +
         std::to_string(infeasible) + " infeasible, " + std::to_string(unknown) + " unknown");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "fixture facts", 1.0, fixtures},
      {2, "coined synthesis iff degree-balanced", 60.0, coined_equivalence},
      {3, "3x3 census: feasible implies strongly quadrangular", 300.0, census_lemma},
      {4, "specular with square blocks is feasible", 0.0, specular_ladder},
      {5, "NO-GO families are infeasible", 0.0, no_go},
      {6, "Euler circuit lifts to Hamiltonian cycle", 10.0, euler_hamilton},
      {7, "walk conservation", 0.0, walk_conservation},
      {8, "oracle soundness and determinism", 0.0, oracle_soundness},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Report report;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(report);
    } catch (const std::exception& e) {
      report.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      report.check(false, "runtime " + std::to_string(secs) + " s over limit " + std::to_string(c.time_limit_s) + " s");
    }
    all_ok = all_ok && report.ok();
    std::printf("[%s] criterion %d: %s (%zu checks, %.3f s)\n", report.ok() ? "PASS" : "FAIL", c.id, c.title.c_str(),
                report.checks(), secs);
    for (const std::string& n : report.notes()) std::printf("         %s\n", n.c_str());
    std::size_t shown = 0;
    for (const std::string& f : report.failures()) {
      if (++shown > 12) {
        std::printf("         ... %zu more failures\n", report.failures().size() - 12);
        break;
      }
      std::printf("         failed: %s\n", f.c_str());
    }
  }
  return all_ok ? 0 : 1;
}
