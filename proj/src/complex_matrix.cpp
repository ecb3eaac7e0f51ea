#include "unipat/complex_matrix.hpp"

#include <cmath>
#include <numbers>

#include "unipat/error.hpp"

namespace unipat {

ComplexMatrix fourier_matrix(std::size_t n) {
  if (n == 0) {
    throw PreconditionError("fourier_matrix: n must be >= 1");
  }
  const auto size = static_cast<Eigen::Index>(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix f(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    for (Eigen::Index k = 0; k < size; ++k) {
      // Reduce the exponent first so large j*k keep full angle precision.
      const auto e = static_cast<double>((static_cast<std::size_t>(j) * static_cast<std::size_t>(k)) % n);
      f(j, k) = std::polar(scale, 2.0 * std::numbers::pi * e / static_cast<double>(n));
    }
  }
  return f;
}

double unitarity_residual(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw PreconditionError("unitarity_residual: matrix must be square");
  }
  const ComplexMatrix gram = m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols());
  return gram.cwiseAbs().maxCoeff();
}

}  // namespace unipat
