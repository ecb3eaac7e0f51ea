#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>

#include "unipat/complex_matrix.hpp"
#include "unipat/digraph.hpp"
#include "unipat/exec.hpp"
#include "unipat/pattern_analysis.hpp"
#include "unipat/synthesis.hpp"

namespace unipat {

struct OracleParams {
  std::size_t restarts = 32;
  std::size_t max_iters = 2000;
  double unitary_tol = 1e-10;
  /// On-pattern entries are kept at least this large during iteration.
  double support_floor = 1e-3;
  double zero_tol = 1e-8;
  std::uint64_t seed = 0;
  /// Overlap-component cap for the combinatorial pre-filter.
  std::size_t sq_cap = 20;

  /// Throws PreconditionError unless all tolerances are positive and
  /// support_floor > zero_tol.
  void validate() const;
};

/// Proven by a strong-quadrangularity witness.
struct Infeasible {
  SqWitness witness;
};

struct Feasible {
  UnitaryCertificate certificate;
  std::size_t restart = 0;
  std::size_t iterations = 0;
};

/// No certificate found; this is never a proof of infeasibility.
struct Unknown {
  double best_residual = 0.0;
  double best_min_on_support = 0.0;
};

using Verdict = std::variant<Infeasible, Feasible, Unknown>;

std::string_view verdict_kind(const Verdict& v);

/// Unitary polar factor U V^H of M = U S V^H. Throws PreconditionError when
/// the smallest singular value is <= 1e-14.
ComplexMatrix nearest_unitary(const ComplexMatrix& m);

/// Zeroes off-pattern entries; on-pattern entries below `floor` in modulus
/// are raised to `floor` keeping their phase. Exact zeros get a phase drawn
/// from (seed, i, j).
ComplexMatrix pattern_projection(const ComplexMatrix& m, const Pattern& p, double floor,
                                 std::uint64_t seed = 0);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal folded into Q.
ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed);

/// Seed of restart r's private random stream.
std::uint64_t restart_seed(std::uint64_t seed, std::size_t restart);

/// Does a unitary with exactly this support exist?
///  1. strong quadrangularity fails -> Infeasible(witness);
///  2. alternating projections from `restarts` seeded Haar starts;
///  3. the smallest successful restart index wins -> Feasible, else Unknown.
/// The verdict does not depend on `exec`. Throws PreconditionError if `p`
/// is not well-formed.
Verdict decide(const Pattern& p, const OracleParams& params = {}, Exec exec = Exec::parallel);

}  // namespace unipat
