#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "npspec/linalg.hpp"

using namespace npspec;

namespace {

ComplexMatrix random_matrix(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> d;
  ComplexMatrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = cplx(d(rng), d(rng));
  return A;
}

bool lex_less(cplx a, cplx b) {
  return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

}  // namespace

TEST_CASE("infinity norm") {
  CHECK(inf_norm(ComplexMatrix::Identity(4, 4)) == 1.0);
  ComplexMatrix A(2, 2);
  A << 1.0, -2.0, cplx(0, 3), 0.0;
  CHECK(inf_norm(A) == 3.0);
}

TEST_CASE("eigenvalues of structured matrices") {
  SUBCASE("diagonal") {
    ComplexMatrix D = ComplexMatrix::Zero(3, 3);
    D(0, 0) = cplx(1, 1);
    D(1, 1) = -2.0;
    D(2, 2) = cplx(0, 0.5);
    auto e = eigenvalues(D);
    std::sort(e.begin(), e.end(), lex_less);
    CHECK(std::abs(e[0] - cplx(-2, 0)) < 1e-14);
    CHECK(std::abs(e[1] - cplx(0, 0.5)) < 1e-14);
    CHECK(std::abs(e[2] - cplx(1, 1)) < 1e-14);
    CHECK(spectral_radius(e) == doctest::Approx(2.0));
  }
  SUBCASE("companion matrix of (z-1)(z-2)(z-3i)") {
    // z^3 + c2 z^2 + c1 z + c0
    const cplx r[3] = {1.0, 2.0, cplx(0, 3)};
    const cplx c2 = -(r[0] + r[1] + r[2]);
    const cplx c1 = r[0] * r[1] + r[0] * r[2] + r[1] * r[2];
    const cplx c0 = -r[0] * r[1] * r[2];
    ComplexMatrix C = ComplexMatrix::Zero(3, 3);
    C(1, 0) = 1.0;
    C(2, 1) = 1.0;
    C(0, 2) = -c0;
    C(1, 2) = -c1;
    C(2, 2) = -c2;
    const auto e = eigenvalues(C);
    for (cplx z : r) {
      double best = 1e9;
      for (cplx w : e) best = std::min(best, std::abs(w - z));
      CHECK(best < 1e-10);
    }
  }
}

TEST_CASE("eigenvalue cross-checks") {
  const ComplexMatrix A = random_matrix(12, 3);
  const auto e = eigenvalues(A);
  cplx prod = 1.0;
  for (cplx z : e) prod *= z;
  const cplx det = A.determinant();
  CHECK(std::abs(prod - det) <= 1e-9 * std::abs(det));

  const ComplexMatrix S = random_matrix(12, 4) + 5.0 * ComplexMatrix::Identity(12, 12);
  auto f = eigenvalues(S * A * S.inverse());
  for (cplx z : e) {
    double best = 1e9;
    for (cplx w : f) best = std::min(best, std::abs(w - z));
    CHECK(best < 1e-9);
  }
}

TEST_CASE("resolvent lower norm") {
  const ComplexMatrix Z = ComplexMatrix::Zero(5, 5);
  CHECK(resolvent_lower_norm(Z, std::polar(0.5, 1.1)).nu == doctest::Approx(0.5).epsilon(1e-15));

  ComplexMatrix D = ComplexMatrix::Zero(3, 3);
  D(0, 0) = 0.1;
  D(1, 1) = cplx(0, 0.3);
  D(2, 2) = -0.2;
  const cplx mu(0.5, 0.0);
  CHECK(resolvent_lower_norm(D, mu).nu == doctest::Approx(0.4).epsilon(1e-14));

  const ComplexMatrix A = 0.03 * random_matrix(8, 5);
  const double a = inf_norm(A);
  REQUIRE(a < 0.5);
  for (double th : {0.0, 1.0, 2.5}) {
    const cplx m = std::polar(0.5, th);
    const ResolventNorm r = resolvent_lower_norm(A, m);
    CHECK_FALSE(r.singular);
    CHECK(r.nu >= 0.5 - a - 1e-14);
    double dist = 1e9;
    for (cplx z : eigenvalues(A)) dist = std::min(dist, std::abs(m - z));
    CHECK(r.nu <= dist + 1e-14);
  }

  ComplexMatrix S = ComplexMatrix::Identity(2, 2);
  CHECK(resolvent_lower_norm(S, 1.0).singular);
}

TEST_CASE("Hermitian top eigenpair") {
  ComplexMatrix H(2, 2);
  H << 2.0, cplx(0, 1), cplx(0, -1), 2.0;
  const HermitianEigenpair e = hermitian_top_eigenpair(H);
  CHECK(e.lambda == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(e.vector.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((H * e.vector - e.lambda * e.vector).norm() < 1e-13);

  const ComplexMatrix R = random_matrix(6, 9);
  const ComplexMatrix G = (R + R.adjoint()) / 2.0;
  const HermitianEigenpair g = hermitian_top_eigenpair(G);
  double top = -1e9;
  for (cplx z : eigenvalues(G)) top = std::max(top, z.real());
  CHECK(g.lambda == doctest::Approx(top).epsilon(1e-12));

  ComplexMatrix bad = G;
  bad(0, 1) += 1e-6;
  CHECK_THROWS(hermitian_top_eigenpair(bad));
}
