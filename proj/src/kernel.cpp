#include "npspec/kernel.hpp"

#include <numbers>
#include <stdexcept>

namespace npspec {

namespace detail {

GaussLegendre01::GaussLegendre01() {
  constexpr int n = 10;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    s[i] = 0.5 * (1.0 - x);
    w[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
}

const GaussLegendre01& gauss_legendre01() {
  static const GaussLegendre01 rule;
  return rule;
}

}  // namespace detail

namespace {

constexpr double kInvTwoPi = 0.5 / std::numbers::pi;

const PeriodicProfile& minus_of(const DilationGraph& graph) {
  if (!graph.two_sided_graph()) throw std::invalid_argument("two-sided graph expected");
  return *graph.minus;
}

}  // namespace

NodeSample sample_node(const PeriodicProfile& g, double u) {
  NodeSample s;
  s.au = std::pow(g.alpha(), u);
  s.g = g.g(u);
  s.f1 = g.f1_at_exponent(u);
  s.w4 = std::pow(1.0 + s.f1 * s.f1, 0.25);
  return s;
}

PQ pq_nodes(const PeriodicProfile& g, double alpha_j, const NodeSample& x, const NodeSample& y) {
  const double a = x.au * alpha_j;
  const double b = y.au;
  const double d = a - b;
  if (std::abs(d) <= kSingularSwitch * std::max(a, b)) return pq_integral(g, a, b);
  // f(a) - f(b) = (a-b) g(x) + b (g(x) - g(y)), exact for constant g.
  const double dg = b * (x.g - y.g);
  return {(x.g - y.f1) / d + dg / (d * d), x.g + dg / d};
}

PQ pq(const PeriodicProfile& g, int j, double x, double y) {
  return pq_nodes(g, std::pow(g.alpha(), j), sample_node(g, x), sample_node(g, y));
}

PQ pq_off_nodes(double alpha_j, const NodeSample& x_self, const NodeSample& y_other) {
  const double a = x_self.au * alpha_j;
  const double b = y_other.au;
  const double s = a + b;
  const double df = a * x_self.g - b * y_other.g;
  return {(s * y_other.f1 + df) / (s * s), df / s};
}

PQ pq_off(const DilationGraph& graph, Sign sign, int j, double x, double y) {
  const PeriodicProfile& minus = minus_of(graph);
  const PeriodicProfile& self = sign == Sign::Plus ? graph.plus : minus;
  const PeriodicProfile& other = sign == Sign::Plus ? minus : graph.plus;
  return pq_off_nodes(std::pow(graph.alpha(), j), sample_node(self, x), sample_node(other, y));
}

double term_one_sided(const PeriodicProfile& g, double alpha_j, double log_alpha,
                      const NodeSample& x, const NodeSample& y) {
  const PQ r = pq_nodes(g, alpha_j, x, y);
  return kInvTwoPi * r.p / (1.0 + r.q * r.q) * (x.w4 / y.w4) *
         std::sqrt(x.au * y.au * alpha_j) * std::abs(log_alpha);
}

double term_off(double alpha_j, double log_alpha, const NodeSample& x_self,
                const NodeSample& y_other) {
  const PQ r = pq_off_nodes(alpha_j, x_self, y_other);
  return kInvTwoPi * r.p / (1.0 + r.q * r.q) * (x_self.w4 / y_other.w4) *
         std::sqrt(x_self.au * y_other.au * alpha_j) * std::abs(log_alpha);
}

std::complex<double> kernel_one_sided(const PeriodicProfile& g, double t, double x, double y,
                                      int M) {
  const NodeSample sx = sample_node(g, x);
  const NodeSample sy = sample_node(g, y);
  std::complex<double> sum = 0.0;
  for (int j = -M; j <= M; ++j)
    sum += std::polar(1.0, j * t) *
           term_one_sided(g, std::pow(g.alpha(), j), g.log_alpha(), sx, sy);
  return sum;
}

KernelBlock kernel_two_sided(const DilationGraph& graph, double t, double x, double y, int M) {
  const PeriodicProfile& gp = graph.plus;
  const PeriodicProfile& gm = minus_of(graph);
  const double la = gp.log_alpha();
  const NodeSample xp = sample_node(gp, x), yp = sample_node(gp, y);
  const NodeSample xm = sample_node(gm, x), ym = sample_node(gm, y);
  KernelBlock k;
  for (int j = -M; j <= M; ++j) {
    const std::complex<double> e = std::polar(1.0, j * t);
    const double aj = std::pow(graph.alpha(), j);
    k.K_minus += e * term_one_sided(gm, aj, la, xm, ym);
    k.L_minus += e * term_off(aj, la, xm, yp);
    k.L_plus += e * term_off(aj, la, xp, ym);
    k.K_plus += e * term_one_sided(gp, aj, la, xp, yp);
  }
  return k;
}

}  // namespace npspec
