#pragma once

#include <cstddef>
#include <vector>

#include "unipat/complex_matrix.hpp"
#include "unipat/digraph.hpp"
#include "unipat/exec.hpp"
#include "unipat/synthesis.hpp"

namespace unipat {

/// Amplitudes indexed by arc id of D (vertices of L(D)).
struct WalkState {
  ComplexVector amplitudes;

  double norm() const { return amplitudes.norm(); }
};

struct VertexDistribution {
  std::vector<double> probabilities;

  double total() const;
};

struct StartMode {
  enum class Kind { uniform, delta };
  Kind kind = Kind::uniform;
  ArcId arc = 0;

  static StartMode uniform() { return {Kind::uniform, 0}; }
  static StartMode delta(ArcId arc) { return {Kind::delta, arc}; }
};

/// Which endpoint of an arc a walker on that arc is counted at.
enum class Grouping { head, tail };

/// Requires a degree-balanced digraph with at least one arc.
WalkState init_state(const Digraph& d, StartMode mode);

/// One step under the arc-indexed coined unitary `u` (row = source arc,
/// column = target arc, as certified against L(D)): amplitude moves from
/// arc a to arc b with weight u(a, b), i.e. psi' = u^T psi.
WalkState step(const ComplexMatrix& u, const WalkState& s, Exec exec = Exec::serial);

/// Probability of v = sum of |amplitude|^2 over arcs whose head (or tail)
/// is v.
VertexDistribution vertex_distribution(const WalkState& s, const Digraph& d,
                                       Grouping grouping = Grouping::head);

struct WalkConfig {
  StartMode start = StartMode::uniform();
  Grouping grouping = Grouping::head;
  CoinConfig coins;
  Tolerances tolerances;
  Exec exec = Exec::serial;
};

/// Distributions after 0..steps steps; entry 0 is the initial distribution.
std::vector<VertexDistribution> run(const Digraph& d, std::size_t steps, const WalkConfig& config = {});

namespace kernels {

/// out = u^T in, straightforward loops.
void transition_serial(const ComplexMatrix& u, const ComplexVector& in, ComplexVector& out);
/// Same result, target arcs split across OpenMP threads.
void transition_parallel(const ComplexMatrix& u, const ComplexVector& in, ComplexVector& out);

}  // namespace kernels

}  // namespace unipat
