#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace npspec {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using cplx = std::complex<double>;

// Maximum absolute row sum.
double inf_norm(const ComplexMatrix& A);

// All eigenvalues of a general square matrix; throws std::runtime_error on non-convergence.
std::vector<cplx> eigenvalues(const ComplexMatrix& A);

double spectral_radius(const std::vector<cplx>& eigs);

struct ResolventNorm {
  double nu = 0.0;  // 1 / ||(A - mu I)^{-1}||_inf
  bool singular = false;
};

ResolventNorm resolvent_lower_norm(const ComplexMatrix& A, cplx mu);

struct HermitianEigenpair {
  double lambda = 0.0;
  ComplexVector vector;
};

// Largest eigenvalue with a unit eigenvector; rejects input that is not Hermitian to 1e-12.
HermitianEigenpair hermitian_top_eigenpair(const ComplexMatrix& H);

}  // namespace npspec
