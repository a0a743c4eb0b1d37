#include "npspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <lapacke.h>

namespace npspec {

namespace {

lapack_complex_double* lp(cplx* p) { return reinterpret_cast<lapack_complex_double*>(p); }

void require_square(const ComplexMatrix& A, const char* what) {
  if (A.rows() != A.cols())
    throw std::invalid_argument(std::string(what) + ": square matrix required, got " +
                                std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
}

}  // namespace

double inf_norm(const ComplexMatrix& A) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < A.cols(); ++j) s += std::abs(A(i, j));
    best = std::max(best, s);
  }
  return best;
}

std::vector<cplx> eigenvalues(const ComplexMatrix& A) {
  require_square(A, "eigenvalues");
  const lapack_int n = static_cast<lapack_int>(A.rows());
  if (n == 0) return {};
  ComplexMatrix work = A;
  std::vector<cplx> w(n);
  const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, lp(work.data()), n,
                                        lp(w.data()), nullptr, 1, nullptr, 1);
  if (info != 0)
    throw std::runtime_error("zgeev failed (info=" + std::to_string(info) + ") on " +
                             std::to_string(n) + "x" + std::to_string(n) + " matrix");
  return w;
}

double spectral_radius(const std::vector<cplx>& eigs) {
  double r = 0.0;
  for (const auto& z : eigs) r = std::max(r, std::abs(z));
  return r;
}

ResolventNorm resolvent_lower_norm(const ComplexMatrix& A, cplx mu) {
  require_square(A, "resolvent_lower_norm");
  const lapack_int n = static_cast<lapack_int>(A.rows());
  ComplexMatrix S = A;
  S.diagonal().array() -= mu;
  std::vector<lapack_int> piv(n);
  lapack_int info = LAPACKE_zgetrf(LAPACK_COL_MAJOR, n, n, lp(S.data()), n, piv.data());
  if (info > 0) return {0.0, true};
  if (info < 0) throw std::runtime_error("zgetrf argument error");
  info = LAPACKE_zgetri(LAPACK_COL_MAJOR, n, lp(S.data()), n, piv.data());
  if (info > 0) return {0.0, true};
  if (info < 0) throw std::runtime_error("zgetri argument error");
  const double norm = inf_norm(S);
  if (!std::isfinite(norm) || norm == 0.0) return {0.0, true};
  return {1.0 / norm, false};
}

HermitianEigenpair hermitian_top_eigenpair(const ComplexMatrix& H) {
  require_square(H, "hermitian_top_eigenpair");
  if (H.rows() == 0) throw std::invalid_argument("hermitian_top_eigenpair: empty matrix");
  const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
  if ((H - H.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("hermitian_top_eigenpair: matrix is not Hermitian");
  const ComplexMatrix Hs = 0.5 * (H + H.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(Hs);
  if (es.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
  const Eigen::Index top = Hs.rows() - 1;
  HermitianEigenpair out;
  out.lambda = es.eigenvalues()(top);
  out.vector = es.eigenvectors().col(top).normalized();
  return out;
}

}  // namespace npspec
