#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace unipat {

using Complex = std::complex<double>;

/// Dense square complex matrix; carrier of candidate and certified unitaries.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Entry (j,k) = exp(2*pi*i*j*k/n) / sqrt(n). Throws PreconditionError on n = 0.
ComplexMatrix fourier_matrix(std::size_t n);

/// max_{ij} |(M^H M - I)_{ij}|
double unitarity_residual(const ComplexMatrix& m);

}  // namespace unipat
