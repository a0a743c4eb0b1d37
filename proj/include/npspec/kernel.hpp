#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "npspec/profile.hpp"

namespace npspec {

// Relative separation below which p_j, q_j use the integral (Taylor) form.
inline constexpr double kSingularSwitch = 1e-3;

struct PQ {
  double p = 0.0;
  double q = 0.0;
};

enum class Sign { Plus = 0, Minus = 1 };

namespace detail {

// 10-point Gauss-Legendre rule on [0,1].
struct GaussLegendre01 {
  std::array<double, 10> s{};
  std::array<double, 10> w{};
  GaussLegendre01();
};

const GaussLegendre01& gauss_legendre01();

}  // namespace detail

// q = int_0^1 f'((1-s)b + s a) ds, p = int_0^1 f''((1-s)b + s a)(1-s) ds.
template <class Fn>
PQ pq_integral(const Fn& fn, double a, double b) {
  if (a == b) return {0.5 * fn.f2(b), fn.f1(b)};
  const auto& gl = detail::gauss_legendre01();
  PQ r;
  for (std::size_t i = 0; i < gl.s.size(); ++i) {
    const double z = (1.0 - gl.s[i]) * b + gl.s[i] * a;
    r.q += gl.w[i] * fn.f1(z);
    r.p += gl.w[i] * fn.f2(z) * (1.0 - gl.s[i]);
  }
  return r;
}

// Difference-quotient form at a = alpha^{x+j}, b = alpha^y for any f with f, f1, f2.
template <class Fn>
PQ pq_generic(const Fn& fn, double a, double b) {
  const double d = a - b;
  if (std::abs(d) <= kSingularSwitch * std::max(a, b)) return pq_integral(fn, a, b);
  const double fa = fn.f(a);
  const double fb = fn.f(b);
  return {((b - a) * fn.f1(b) + fa - fb) / (d * d), (fa - fb) / d};
}

// Samples of g at an exponent u: alpha^u, g(u), f'(alpha^u), (1+f'(alpha^u)^2)^{1/4}.
struct NodeSample {
  double au = 0.0;
  double g = 0.0;
  double f1 = 0.0;
  double w4 = 0.0;
};

NodeSample sample_node(const PeriodicProfile& g, double u);

PQ pq(const PeriodicProfile& g, int j, double x, double y);
PQ pq_nodes(const PeriodicProfile& g, double alpha_j, const NodeSample& x, const NodeSample& y);

PQ pq_off(const DilationGraph& graph, Sign sign, int j, double x, double y);
PQ pq_off_nodes(double alpha_j, const NodeSample& x_self, const NodeSample& y_other);

// Real coefficient of e^{ijt} in the kernel series.
double term_one_sided(const PeriodicProfile& g, double alpha_j, double log_alpha,
                      const NodeSample& x, const NodeSample& y);
double term_off(double alpha_j, double log_alpha, const NodeSample& x_self,
                const NodeSample& y_other);

std::complex<double> kernel_one_sided(const PeriodicProfile& g, double t, double x, double y,
                                      int M);

struct KernelBlock {
  std::complex<double> K_minus;
  std::complex<double> L_minus;
  std::complex<double> L_plus;
  std::complex<double> K_plus;
};

KernelBlock kernel_two_sided(const DilationGraph& graph, double t, double x, double y, int M);

}  // namespace npspec
