#include "unipat/euler.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "unipat/error.hpp"

namespace unipat {

namespace {

void require_balanced(const Digraph& d) {
  if (d.arc_count() == 0) {
    throw PreconditionError("euler circuit: digraph has no arcs");
  }
  if (auto v = first_unbalanced_vertex(d)) {
    const Degrees deg = degrees(d, *v);
    throw PreconditionError("euler circuit: vertex " + std::to_string(*v) + " is unbalanced (in " +
                            std::to_string(deg.in) + ", out " + std::to_string(deg.out) + ")");
  }
}

// Iterative Hierholzer from `start`, over the out-arc lists (ascending ids).
EulerCircuit hierholzer(const Digraph& d, const std::vector<std::vector<ArcId>>& out, Vertex start) {
  std::vector<std::size_t> next(d.vertex_count(), 0);
  struct Frame {
    Vertex vertex;
    std::optional<ArcId> via;
  };
  std::vector<Frame> stack{{start, std::nullopt}};
  EulerCircuit reversed;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const Vertex v = top.vertex;
    if (next[v] < out[v].size()) {
      const ArcId a = out[v][next[v]++];
      stack.push_back({d.arc(a).head, a});
    } else {
      if (top.via) reversed.push_back(*top.via);
      stack.pop_back();
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

std::vector<std::vector<ArcId>> out_lists(const Digraph& d) {
  std::vector<std::vector<ArcId>> out(d.vertex_count());
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    out[d.arc(a).tail].push_back(a);
  }
  return out;
}

}  // namespace

EulerCircuit euler_circuit(const Digraph& d) {
  require_balanced(d);
  if (!is_strongly_connected(d)) {
    throw PreconditionError("euler circuit: digraph is not strongly connected");
  }
  const auto out = out_lists(d);
  Vertex start = 0;
  while (out[start].empty()) ++start;
  return hierholzer(d, out, start);
}

std::vector<EulerCircuit> euler_circuits_per_component(const Digraph& d) {
  require_balanced(d);
  // In a balanced digraph every arc lies inside a strong component, so a
  // walk from a component's first vertex stays in that component.
  const auto comp = strong_components(d);
  const auto out = out_lists(d);
  std::set<std::size_t> done;
  std::vector<EulerCircuit> circuits;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (out[v].empty() || done.count(comp[v])) continue;
    done.insert(comp[v]);
    circuits.push_back(hierholzer(d, out, v));
  }
  return circuits;
}

bool verify_euler_circuit(const Digraph& d, const EulerCircuit& circuit) {
  if (circuit.size() != d.arc_count() || circuit.empty()) return false;
  std::vector<bool> seen(d.arc_count(), false);
  for (ArcId a : circuit) {
    if (a >= d.arc_count() || seen[a]) return false;
    seen[a] = true;
  }
  for (std::size_t k = 0; k < circuit.size(); ++k) {
    const ArcId next = circuit[(k + 1) % circuit.size()];
    if (d.arc(circuit[k]).head != d.arc(next).tail) return false;
  }
  return true;
}

HamiltonianCycle hamiltonian_cycle_in_line_digraph(const Digraph& d) {
  const EulerCircuit circuit = euler_circuit(d);
  return {circuit.begin(), circuit.end()};
}

bool verify_hamiltonian_cycle(const Digraph& ld, const HamiltonianCycle& cycle) {
  if (cycle.size() != ld.vertex_count()) return false;
  std::vector<bool> seen(ld.vertex_count(), false);
  for (Vertex v : cycle) {
    if (v >= ld.vertex_count() || seen[v]) return false;
    seen[v] = true;
  }
  std::set<Arc> arcs(ld.arcs().begin(), ld.arcs().end());
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (!arcs.count(Arc{cycle[k], cycle[(k + 1) % cycle.size()]})) return false;
  }
  return true;
}

}  // namespace unipat
