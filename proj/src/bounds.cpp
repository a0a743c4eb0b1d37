#include "npspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace npspec {

namespace {

constexpr double kPi = std::numbers::pi;

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
}

double diag_factor(double alpha) {
  return (1.0 + std::sqrt(alpha) + 1.0 / std::sqrt(alpha)) / (4.0 * alpha * alpha);
}

void require_strip(const DilationGraph& graph, double c) {
  const StripCheck chk = validate_strip(graph, c);
  if (!chk.ok())
    throw std::domain_error("strip width fails " + chk.violations.front().condition);
}

double one_sided_C1(const PeriodicProfile& g, int M) {
  const Aggregates a = aggregate_norms(g, 0.0);
  const double la = std::abs(g.log_alpha());
  return (2.0 * la * a.F0 / kPi) * std::pow(1.0 + a.F0 * a.F0, 0.25) * tail_B(M, g.alpha());
}

double one_sided_C3(const PeriodicProfile& g) {
  const Aggregates a = aggregate_norms(g, 0.0);
  const double la = std::abs(g.log_alpha());
  const double alpha = g.alpha();
  return std::pow(1.0 + a.F0 * a.F0, 0.25) / kPi *
         (a.G0 * diag_factor(alpha) + 2.0 * la * a.F0 * tail_Bstar(10, alpha));
}

OneSidedStripBounds one_sided_strip(const PeriodicProfile& g, double c) {
  const Aggregates a = aggregate_norms(g, c);
  const double la = std::abs(g.log_alpha());
  const double alpha = g.alpha();
  const double bs = tail_Bstar(10, alpha);
  const double den = 1.0 - a.Ic * a.Ic;
  OneSidedStripBounds b;
  b.C5 = std::pow(1.0 + a.Fc * a.Fc, 0.25) / (kPi * den) *
         (a.Gc * diag_factor(alpha) + la * (a.Fc + a.F0) * bs);
  b.C6 = std::pow(1.0 + a.F0 * a.F0, 0.25) / (kPi * std::pow(den, 1.25)) *
         (a.Gc * diag_factor(alpha) + 2.0 * la * a.Fc * bs);
  return b;
}

}  // namespace

double tail_B(int n, double alpha) {
  require_alpha(alpha);
  if (n < 2) throw std::invalid_argument("tail_B needs n >= 2");
  const double la = std::log(alpha);
  return std::log(std::tanh((n - 1) * std::abs(la) / 4.0)) / (std::sqrt(alpha) * la);
}

double tail_Bstar(int n, double alpha) {
  double s = tail_B(n, alpha);
  for (int j = 2; j <= n; ++j) s += std::pow(alpha, j / 2.0) / (alpha - std::pow(alpha, j));
  return s;
}

double tail_C(int n, double alpha) {
  require_alpha(alpha);
  if (n < 0) throw std::invalid_argument("tail_C needs n >= 0");
  return 2.0 * std::atan(std::pow(alpha, n / 2.0)) / (alpha * alpha * std::abs(std::log(alpha)));
}

double tail_C_symmetric(int n, double alpha) { return 2.0 * tail_C(n, alpha); }

double tail_Cstar(int n, double alpha) {
  double s = 1.0 / (2.0 * alpha * alpha) + 2.0 * tail_C(n, alpha);
  for (int j = 1; j <= n; ++j)
    s += 2.0 / (alpha * alpha) / (std::pow(alpha, j / 2.0) + std::pow(alpha, -j / 2.0));
  return s;
}

OneSidedStripBounds strip_kernel_bounds_one_sided(const PeriodicProfile& g, double c) {
  require_strip(DilationGraph::one_sided(g), c);
  return one_sided_strip(g, c);
}

TwoSidedStripBounds strip_kernel_bounds_two_sided(const DilationGraph& graph, double c) {
  if (!graph.two_sided_graph()) throw std::invalid_argument("two-sided graph expected");
  require_strip(graph, c);
  const PairAggregates pa = aggregate_norms(graph, c);
  const PeriodicProfile* prof[2] = {&graph.plus, &*graph.minus};
  const double alpha = graph.alpha();
  const double la = std::abs(std::log(alpha));
  const double cs = tail_Cstar(10, alpha);

  TwoSidedStripBounds b;
  for (int s = 0; s < 2; ++s) {
    const int o = 1 - s;
    const OneSidedStripBounds d = one_sided_strip(*prof[s], c);
    b.K_c0[s] = d.C5;
    b.K_0c[s] = d.C6;

    const double qs = pa.side[s].im_g_c + alpha * c * pa.Kc[s];
    const double qo = pa.side[o].im_g_c + alpha * c * pa.Kc[o];
    const double a4 = std::pow(alpha, -4.0);
    b.L_c0[s] = (la * pa.side[o].F0 + pa.Kc[s]) / (1.0 - a4 * qs * qs) *
                std::pow(1.0 + pa.side[s].Fc * pa.side[s].Fc, 0.25) * cs / (2.0 * kPi);
    const double Io = pa.side[o].Ic;
    b.L_0c[s] = (la * pa.side[o].Fc + pa.Kc[o]) / (1.0 - a4 * qo * qo) *
                std::pow((1.0 + pa.side[s].F0 * pa.side[s].F0) / (1.0 - Io * Io), 0.25) * cs /
                (2.0 * kPi);
  }
  constexpr int P = 0, Mi = 1;
  b.row[0] = b.K_0c[Mi] * b.K_c0[Mi] + b.L_0c[Mi] * b.L_c0[P] + b.K_0c[Mi] * b.L_c0[Mi] +
             b.L_0c[Mi] * b.K_c0[P];
  b.row[1] = b.L_0c[P] * b.K_c0[Mi] + b.K_0c[P] * b.L_c0[P] + b.L_0c[P] * b.L_c0[Mi] +
             b.K_0c[P] * b.K_c0[P];
  b.Cstar = std::max(b.row[0], b.row[1]);
  return b;
}

double c1_constant(const DilationGraph& graph, int M) {
  if (M < 2) throw std::invalid_argument("truncation M must be at least 2");
  if (!graph.two_sided_graph()) return one_sided_C1(graph.plus, M);
  const PairAggregates pa = aggregate_norms(graph, 0.0);
  const double alpha = graph.alpha();
  const double la = std::abs(std::log(alpha));
  const double bm = tail_B(M, alpha);
  const double cm = tail_C(M, alpha);
  double best = 0.0;
  for (int s = 0; s < 2; ++s) {
    const double F = pa.side[s].F0;
    const double Fo = pa.side[1 - s].F0;
    best = std::max(best, std::pow(1.0 + F * F, 0.25) *
                              (2.0 * la * F * bm + (la * Fo + pa.K0) * cm));
  }
  return best / kPi;
}

double c3_constant(const DilationGraph& graph) {
  if (!graph.two_sided_graph()) return one_sided_C3(graph.plus);
  const PairAggregates pa = aggregate_norms(graph, 0.0);
  const double alpha = graph.alpha();
  const double la = std::abs(std::log(alpha));
  const double R = 2.0 * diag_factor(alpha);
  const double bs = tail_Bstar(10, alpha);
  const double cs = tail_Cstar(10, alpha);
  double best = 0.0;
  for (int s = 0; s < 2; ++s) {
    const double F = pa.side[s].F0;
    const double Fo = pa.side[1 - s].F0;
    best = std::max(best, std::pow(1.0 + F * F, 0.25) *
                              (pa.side[s].G0 * R + 4.0 * la * F * bs + (la * Fo + pa.K0) * cs));
  }
  return best / (2.0 * kPi);
}

double c4_constant(const DilationGraph& graph, double c) {
  const double e = 2.0 * std::exp(2.0 * kPi * c);
  if (!graph.two_sided_graph()) {
    const OneSidedStripBounds b = strip_kernel_bounds_one_sided(graph.plus, c);
    return e * b.C5 * b.C6;
  }
  return e * strip_kernel_bounds_two_sided(graph, c).Cstar;
}

CertificateConstants certificate_constants(const DilationGraph& graph, double c, int M) {
  CertificateConstants k;
  k.side = graph.side;
  k.c = c;
  k.M = M;
  k.C1 = c1_constant(graph, M);
  k.C3 = c3_constant(graph);
  k.C4 = c4_constant(graph, c);
  if (!graph.two_sided_graph()) {
    const OneSidedStripBounds b = strip_kernel_bounds_one_sided(graph.plus, c);
    k.C5 = b.C5;
    k.C6 = b.C6;
  }
  return k;
}

double quadrature_error_bound(double C4, int N, double c) {
  return C4 / std::expm1(2.0 * kPi * N * c);
}

}  // namespace npspec
