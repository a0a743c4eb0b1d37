#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "npspec/kernel.hpp"
#include "npspec/nystrom.hpp"

using namespace npspec;

namespace {

constexpr double kPi = std::numbers::pi;

const DilationGraph kEx1 = DilationGraph::one_sided(PeriodicProfile::sine_squared(0.75));

}  // namespace

TEST_CASE("quadrature grid") {
  const QuadratureGrid g(4);
  CHECK(g.node(0) == 0.125);
  CHECK(g.node(3) == 0.875);
  CHECK(g.weight() == 0.25);
  CHECK_THROWS(QuadratureGrid(0));
}

TEST_CASE("entries are scaled kernel samples") {
  const int N = 12, M = 25;
  const double t = 0.9;
  const NystromMatrix A = assemble(kEx1, t, N, M);
  CHECK(A.matrix.rows() == N);
  const QuadratureGrid grid(N);
  for (int p = 0; p < N; p += 5)
    for (int q = 0; q < N; q += 3) {
      const cplx k = kernel_one_sided(kEx1.plus, t, grid.node(p), grid.node(q), M) / double(N);
      CHECK(std::abs(A.matrix(p, q) - k) <= 1e-14 * (1 + std::abs(k)));
    }
}

TEST_CASE("two-sided block layout") {
  SUBCASE("cone") {
    const auto cone = DilationGraph::two_sided(PeriodicProfile::constant(0.875, 10.0),
                                               PeriodicProfile::constant(0.875, 10.0));
    const NystromMatrix A = assemble(cone, 1.3, 8, 40);
    REQUIRE(A.matrix.rows() == 16);
    CHECK(A.matrix.block(0, 0, 8, 8).norm() == 0.0);
    CHECK(A.matrix.block(8, 8, 8, 8).norm() == 0.0);
    CHECK(A.matrix.block(0, 8, 8, 8).norm() > 0.0);
    const QuadratureGrid grid(8);
    const KernelBlock k = kernel_two_sided(cone, 1.3, grid.node(2), grid.node(5), 40);
    CHECK(std::abs(A.matrix(2, 13) - k.L_minus / 8.0) < 1e-14);
    CHECK(std::abs(A.matrix(10, 5) - k.L_plus / 8.0) < 1e-14);
  }
  SUBCASE("flat graph assembles to zero") {
    CHECK(assemble(DilationGraph::one_sided(PeriodicProfile::flat(0.75)), 0.4, 6, 10).matrix.norm() ==
          0.0);
    CHECK(assemble_derivative_bound(DilationGraph::one_sided(PeriodicProfile::flat(0.75)), 6, 10) ==
          0.0);
  }
  SUBCASE("flat minus side embeds the one-sided matrix") {
    const auto sin = PeriodicProfile::sine_squared(2.0 / 3.0);
    const auto g = DilationGraph::two_sided(sin, PeriodicProfile::flat(2.0 / 3.0));
    const NystromMatrix A = assemble(g, 2.2, 10, 30);
    const NystromMatrix B = assemble(DilationGraph::one_sided(sin), 2.2, 10, 30);
    CHECK(A.matrix.block(0, 0, 10, 10).norm() == 0.0);
    CHECK((A.matrix.block(10, 10, 10, 10) - B.matrix).norm() <= 1e-14 * B.matrix.norm());
  }
}

TEST_CASE("conjugation symmetry is exact") {
  const KernelTable table(kEx1, 16, 40);
  for (double t : {0.2, 1.5, 3.1}) {
    const ComplexMatrix a = table.assemble(t).matrix;
    const ComplexMatrix b = table.assemble(-t).matrix;
    CHECK(b == a.conjugate());
  }
}

TEST_CASE("Lipschitz bound in t") {
  const KernelTable table(kEx1, 16, 60);
  const double B = table.derivative_bound_norm();
  CHECK(B > 0.0);
  for (double t : {0.1, 1.0, 2.9})
    for (double h : {1e-3, 1e-2}) {
      const double diff = inf_norm(table.assemble(t + h).matrix - table.assemble(t).matrix);
      CHECK(diff <= h * B * (1 + 1e-12));
    }
  CHECK(assemble_derivative_bound(kEx1, 16, 30) <= assemble_derivative_bound(kEx1, 16, 60));
  CHECK(assemble_derivative_bound(kEx1, 16, 60) <= assemble_derivative_bound(kEx1, 16, 120));
}

TEST_CASE("workers do not change the result") {
  const KernelTable one(kEx1, 20, 30, 1);
  const KernelTable four(kEx1, 20, 30, 4);
  CHECK(one.assemble(0.7).matrix == four.assemble(0.7, 4).matrix);
  CHECK(one.derivative_bound_norm() == four.derivative_bound_norm());
}

TEST_CASE("matrix CSV dump") {
  const NystromMatrix A = assemble(kEx1, kPi / 3, 3, 10);
  std::ostringstream os;
  write_matrix_csv(A, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "p,q,re,im");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 9);
  CHECK(os.str().find("\n1,1,") != std::string::npos);
  CHECK(os.str().find("\n3,3,") != std::string::npos);
}
