#pragma once

#include <cstddef>
#include <map>

#include "unipat/complex_matrix.hpp"
#include "unipat/digraph.hpp"

namespace unipat {

struct Tolerances {
  double unitary_tol = 1e-10;
  double zero_tol = 1e-12;
};

/// A matrix measured against a target pattern.
struct UnitaryCertificate {
  ComplexMatrix matrix;
  Pattern target;
  /// max |(M^H M - I)_ij|
  double unitarity_residual = 0.0;
  /// |m_ij| > zero_tol exactly on the 1-positions of target.
  bool support_exact = false;
  /// Smallest |m_ij| over the 1-positions of target.
  double min_on_support = 0.0;
  Tolerances tolerances;

  bool valid() const noexcept {
    return support_exact && unitarity_residual <= tolerances.unitary_tol;
  }
};

/// Pure measurement of `m` against `target`. Throws on size mismatch.
UnitaryCertificate verify(const ComplexMatrix& m, const Pattern& target, const Tolerances& tol = {});

/// Per-degree coin override for the coined construction. Degrees without an
/// entry use fourier_matrix(d). Every coin must be unitary and zero-free.
struct CoinConfig {
  std::map<std::size_t, ComplexMatrix> coins;
};

/// Places fourier_matrix(d) on every (row class x column class) block of a
/// specular pattern with square blocks, indices in ascending order. Throws
/// PreconditionError naming the violating pair or the non-square block.
UnitaryCertificate synthesize_specular(const Pattern& p, const Tolerances& tol = {});

struct CoinedSynthesis {
  UnitaryCertificate certificate;
  ArcLabeling labeling;
};

/// Arc-indexed unitary with support pattern_of(line_digraph(d)): for every
/// vertex v of degree d the coin sits on (in-arcs of v) x (out-arcs of v),
/// both ordered by arc id. Throws PreconditionError naming an unbalanced
/// vertex, or on an invalid coin.
CoinedSynthesis synthesize_coined(const Digraph& d, const CoinConfig& coins = {},
                                  const Tolerances& tol = {});

/// result(rows(i), cols(j)) = u(i, j), i.e. P U Q.
ComplexMatrix transport(const ComplexMatrix& u, const Permutation& rows, const Permutation& cols);

}  // namespace unipat
