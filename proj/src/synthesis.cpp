#include "unipat/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "unipat/error.hpp"
#include "unipat/pattern_analysis.hpp"

namespace unipat {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::string set_to_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(s[k]);
  }
  return out + "}";
}

const ComplexMatrix& coin_for(std::size_t degree, const CoinConfig& config, const Tolerances& tol,
                              std::map<std::size_t, ComplexMatrix>& cache) {
  if (auto it = config.coins.find(degree); it != config.coins.end()) {
    const ComplexMatrix& c = it->second;
    if (c.rows() != idx(degree) || c.cols() != idx(degree)) {
      throw PreconditionError("coin for degree " + std::to_string(degree) + " has wrong size");
    }
    if (unitarity_residual(c) > tol.unitary_tol) {
      throw PreconditionError("coin for degree " + std::to_string(degree) + " is not unitary");
    }
    if (c.cwiseAbs().minCoeff() <= tol.zero_tol) {
      throw PreconditionError("coin for degree " + std::to_string(degree) + " has a zero entry");
    }
    return c;
  }
  auto [it, inserted] = cache.try_emplace(degree);
  if (inserted) it->second = fourier_matrix(degree);
  return it->second;
}

}  // namespace

UnitaryCertificate verify(const ComplexMatrix& m, const Pattern& target, const Tolerances& tol) {
  if (m.rows() != m.cols() || m.rows() != idx(target.size())) {
    throw PreconditionError("verify: matrix and pattern sizes differ");
  }
  UnitaryCertificate cert{m, target, 0.0, false, 0.0, tol};
  cert.unitarity_residual = unitarity_residual(m);
  cert.support_exact = true;
  cert.min_on_support = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < target.size(); ++i) {
    for (std::size_t j = 0; j < target.size(); ++j) {
      const double mag = std::abs(m(idx(i), idx(j)));
      if (target.at(i, j)) {
        cert.min_on_support = std::min(cert.min_on_support, mag);
        if (mag <= tol.zero_tol) cert.support_exact = false;
      } else if (mag > tol.zero_tol) {
        cert.support_exact = false;
      }
    }
  }
  if (target.ones() == 0) cert.min_on_support = 0.0;
  return cert;
}

UnitaryCertificate synthesize_specular(const Pattern& p, const Tolerances& tol) {
  const SpecularCheck spec = check_specular(p);
  if (!spec.specular) {
    const LinePair& v = *spec.violation;
    throw PreconditionError("pattern is not specular: " + std::string(side_name(v.side)) + " " +
                            std::to_string(v.first) + " and " + std::to_string(v.second) +
                            " overlap without being equal");
  }
  const SpecularBlocks& blocks = *spec.blocks;
  for (const SpecularBlock& b : blocks.blocks) {
    if (b.rows.size() != b.cols.size()) {
      throw PreconditionError("block rows " + set_to_string(b.rows) + " x cols " + set_to_string(b.cols) +
                              " is not square");
    }
  }

  const std::size_t n = p.size();
  ComplexMatrix u = ComplexMatrix::Zero(idx(n), idx(n));
  for (const SpecularBlock& b : blocks.blocks) {
    const ComplexMatrix f = fourier_matrix(b.rows.size());
    for (std::size_t r = 0; r < b.rows.size(); ++r) {
      for (std::size_t c = 0; c < b.cols.size(); ++c) {
        u(idx(b.rows[r]), idx(b.cols[c])) = f(idx(r), idx(c));
      }
    }
  }
  return verify(u, p, tol);
}

CoinedSynthesis synthesize_coined(const Digraph& d, const CoinConfig& coins, const Tolerances& tol) {
  if (d.arc_count() == 0) {
    throw PreconditionError("synthesize_coined: digraph has no arcs");
  }
  if (auto v = first_unbalanced_vertex(d)) {
    const Degrees deg = degrees(d, *v);
    throw PreconditionError("vertex " + std::to_string(*v) + " is unbalanced (in " + std::to_string(deg.in) +
                            ", out " + std::to_string(deg.out) + ")");
  }

  std::vector<std::vector<ArcId>> in_arcs(d.vertex_count()), out_arcs(d.vertex_count());
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    out_arcs[d.arc(a).tail].push_back(a);
    in_arcs[d.arc(a).head].push_back(a);
  }

  const std::size_t m = d.arc_count();
  ComplexMatrix u = ComplexMatrix::Zero(idx(m), idx(m));
  std::map<std::size_t, ComplexMatrix> cache;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    const std::size_t deg = out_arcs[v].size();
    if (deg == 0) continue;
    const ComplexMatrix& coin = coin_for(deg, coins, tol, cache);
    for (std::size_t k = 0; k < deg; ++k) {
      for (std::size_t l = 0; l < deg; ++l) {
        u(idx(in_arcs[v][k]), idx(out_arcs[v][l])) = coin(idx(k), idx(l));
      }
    }
  }

  LineDigraph ld = line_digraph(d);
  return {verify(u, pattern_of(ld.digraph), tol), std::move(ld.labeling)};
}

ComplexMatrix transport(const ComplexMatrix& u, const Permutation& rows, const Permutation& cols) {
  if (u.rows() != u.cols() || u.rows() != idx(rows.size()) || u.rows() != idx(cols.size())) {
    throw PreconditionError("transport: size mismatch");
  }
  ComplexMatrix out(u.rows(), u.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(idx(rows(i)), idx(cols(j))) = u(idx(i), idx(j));
    }
  }
  return out;
}

}  // namespace unipat
