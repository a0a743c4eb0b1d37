#include "npspec/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "npspec/bounds.hpp"
#include "npspec/parallel.hpp"

namespace npspec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

ComplexMatrix restricted_matrix(const NystromMatrix& A, int p, bool keep_phase) {
  if (p < 0) throw std::invalid_argument("trigonometric degree p must be nonnegative");
  if (A.side != Side::OneSided) throw std::invalid_argument("restricted matrix needs a half-graph");
  const int N = A.N;
  const QuadratureGrid grid(N);
  ComplexMatrix E(N, 2 * p + 1);
  for (int q = 0; q < N; ++q)
    for (int k = -p; k <= p; ++k) E(q, k + p) = std::polar(1.0, kTwoPi * k * grid.node(q));
  if (!keep_phase) return E.adjoint() * A.matrix * E / static_cast<double>(N);
  ComplexVector D(N);
  for (int q = 0; q < N; ++q) D(q) = std::polar(1.0, grid.node(q) * A.t);
  const ComplexMatrix B = D.asDiagonal() * A.matrix * D.conjugate().asDiagonal();
  return E.adjoint() * B * E / static_cast<double>(N);
}

ComplexMatrix restricted_matrix(const PeriodicProfile& g, int p, double t, int N, int M,
                                bool keep_phase) {
  return restricted_matrix(assemble(DilationGraph::one_sided(g), t, N, M), p, keep_phase);
}

NumRangePolygon johnson_polygon(const ComplexMatrix& T, int n, int workers) {
  if (n < 3) throw std::invalid_argument("Johnson polygon needs n >= 3");
  if (T.rows() != T.cols()) throw std::invalid_argument("square matrix required");
  NumRangePolygon poly;
  poly.n = n;
  poly.vertices.resize(n + 1);
  poly.support.resize(n + 1);
  parallel_for(n, workers, [&](std::size_t l) {
    const double theta = kTwoPi * static_cast<double>(l) / n;
    const ComplexMatrix R = std::polar(1.0, -theta) * T;
    const ComplexMatrix H = 0.5 * (R + R.adjoint());
    const HermitianEigenpair e = hermitian_top_eigenpair(H);
    poly.support[l] = e.lambda;
    poly.vertices[l] = e.vector.dot(T * e.vector);
  });
  poly.vertices[n] = poly.vertices[0];
  poly.support[n] = poly.support[0];
  return poly;
}

InscribedRadius inscribed_radius(const NumRangePolygon& polygon, double C7) {
  InscribedRadius out;
  const auto& z = polygon.vertices;
  if (z.size() < 4) {
    out.reason = "polygon has fewer than three vertices";
    return out;
  }
  out.R_min = INFINITY;
  for (std::size_t l = 0; l + 1 < z.size(); ++l) out.R_min = std::min(out.R_min, std::abs(z[l]));
  if (!(out.R_min > 1e-12)) {
    out.reason = "origin lies on or near a vertex";
    return out;
  }
  double winding = 0.0;
  for (std::size_t l = 0; l + 1 < z.size(); ++l) {
    const double gap = std::arg(z[l + 1] / z[l]);
    if (gap < 0.0) {
      out.reason = "vertex arguments are not monotone; origin not interior";
      return out;
    }
    out.theta_max = std::max(out.theta_max, gap);
    winding += gap;
  }
  if (std::abs(winding - kTwoPi) > 1e-9 || !(out.theta_max < std::numbers::pi)) {
    out.reason = "origin not strictly interior to the polygon";
    return out;
  }
  const double r = out.R_min * std::cos(out.theta_max / 2.0) - C7;
  if (!(r > 0.0)) {
    out.reason = "inscribed radius not positive after subtracting C7";
    return out;
  }
  out.R_star = r;
  return out;
}

double c7_constant(const PeriodicProfile& g, double c, int p, int N, int M) {
  const OneSidedStripBounds b = strip_kernel_bounds_one_sided(g, c);
  const double d = 2.0 * p + 1.0;
  return 2.0 * d * std::exp(std::numbers::pi * c * d) * (b.C5 + b.C6) /
             std::expm1(kTwoPi * N * c) +
         c1_constant(DilationGraph::one_sided(g), M);
}

void write_polygon_csv(const NumRangePolygon& polygon, std::ostream& out) {
  out << "re,im\n";
  out.precision(17);
  for (const auto& z : polygon.vertices) out << z.real() << "," << z.imag() << "\n";
}

}  // namespace npspec
