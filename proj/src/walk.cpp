#include "unipat/walk.hpp"

#include <cmath>
#include <numeric>

#include "unipat/error.hpp"

namespace unipat {

double VertexDistribution::total() const {
  return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

WalkState init_state(const Digraph& d, StartMode mode) {
  if (d.arc_count() == 0) {
    throw PreconditionError("walk: digraph has no arcs");
  }
  if (!is_degree_balanced(d)) {
    throw PreconditionError("walk: digraph is not degree-balanced");
  }
  const auto m = static_cast<Eigen::Index>(d.arc_count());
  WalkState s{ComplexVector::Zero(m)};
  if (mode.kind == StartMode::Kind::uniform) {
    s.amplitudes.setConstant(Complex(1.0 / std::sqrt(static_cast<double>(m)), 0.0));
  } else {
    if (mode.arc >= d.arc_count()) {
      throw PreconditionError("walk: start arc " + std::to_string(mode.arc) + " out of range");
    }
    s.amplitudes(static_cast<Eigen::Index>(mode.arc)) = 1.0;
  }
  return s;
}

namespace kernels {

void transition_serial(const ComplexMatrix& u, const ComplexVector& in, ComplexVector& out) {
  const Eigen::Index m = u.rows();
  out.resize(m);
  for (Eigen::Index b = 0; b < m; ++b) {
    Complex acc = 0.0;
    for (Eigen::Index a = 0; a < m; ++a) {
      acc += u(a, b) * in(a);
    }
    out(b) = acc;
  }
}

void transition_parallel(const ComplexMatrix& u, const ComplexVector& in, ComplexVector& out) {
  const Eigen::Index m = u.rows();
  out.resize(m);
  // Column-major storage: column b of u is contiguous.
#pragma omp parallel for schedule(static)
  for (Eigen::Index b = 0; b < m; ++b) {
    Complex acc = 0.0;
    for (Eigen::Index a = 0; a < m; ++a) {
      acc += u(a, b) * in(a);
    }
    out(b) = acc;
  }
}

}  // namespace kernels

WalkState step(const ComplexMatrix& u, const WalkState& s, Exec exec) {
  if (u.rows() != u.cols() || u.rows() != s.amplitudes.size()) {
    throw PreconditionError("walk step: dimension mismatch");
  }
  WalkState next;
  if (exec == Exec::parallel) {
    kernels::transition_parallel(u, s.amplitudes, next.amplitudes);
  } else {
    kernels::transition_serial(u, s.amplitudes, next.amplitudes);
  }
  return next;
}

VertexDistribution vertex_distribution(const WalkState& s, const Digraph& d, Grouping grouping) {
  if (s.amplitudes.size() != static_cast<Eigen::Index>(d.arc_count())) {
    throw PreconditionError("vertex_distribution: state size does not match arc count");
  }
  VertexDistribution dist{std::vector<double>(d.vertex_count(), 0.0)};
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    const Vertex v = grouping == Grouping::head ? d.arc(a).head : d.arc(a).tail;
    dist.probabilities[v] += std::norm(s.amplitudes(static_cast<Eigen::Index>(a)));
  }
  return dist;
}

std::vector<VertexDistribution> run(const Digraph& d, std::size_t steps, const WalkConfig& config) {
  WalkState s = init_state(d, config.start);
  const CoinedSynthesis coined = synthesize_coined(d, config.coins, config.tolerances);
  if (!coined.certificate.valid()) {
    throw PreconditionError("walk: coined unitary failed verification");
  }
  const ComplexMatrix& u = coined.certificate.matrix;

  std::vector<VertexDistribution> out;
  out.reserve(steps + 1);
  out.push_back(vertex_distribution(s, d, config.grouping));
  for (std::size_t t = 0; t < steps; ++t) {
    s = step(u, s, config.exec);
    out.push_back(vertex_distribution(s, d, config.grouping));
  }
  return out;
}

}  // namespace unipat
