#pragma once

#include <vector>

#include "unipat/digraph.hpp"

namespace unipat {

/// Arc ids of D in traversal order.
using EulerCircuit = std::vector<ArcId>;
/// Vertex ids of L(D) in traversal order.
using HamiltonianCycle = std::vector<Vertex>;

/// Hierholzer's algorithm. Starts at the smallest vertex with an out-arc and
/// always takes the smallest unused arc id. Requires a degree-balanced,
/// strongly connected digraph with at least one arc.
EulerCircuit euler_circuit(const Digraph& d);

/// One circuit per strongly connected component that carries arcs, in order
/// of the component's smallest vertex. Requires degree balance only.
std::vector<EulerCircuit> euler_circuits_per_component(const Digraph& d);

/// Each arc id exactly once, consecutive arcs (cyclically) head-to-tail.
bool verify_euler_circuit(const Digraph& d, const EulerCircuit& circuit);

/// The Euler circuit of D read as a vertex sequence of L(D), whose vertices
/// are D's arcs in id order.
HamiltonianCycle hamiltonian_cycle_in_line_digraph(const Digraph& d);

/// Each vertex of `ld` exactly once, consecutive vertices (cyclically)
/// joined by an arc of `ld`.
bool verify_hamiltonian_cycle(const Digraph& ld, const HamiltonianCycle& cycle);

}  // namespace unipat
