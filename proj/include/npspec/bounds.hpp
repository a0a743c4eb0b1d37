#pragma once

#include "npspec/profile.hpp"

namespace npspec {

double tail_B(int n, double alpha);
double tail_Bstar(int n, double alpha);
double tail_C(int n, double alpha);
double tail_Cstar(int n, double alpha);
// Bound on sum_{|j|>n} alpha^{j/2}/(alpha^{j+2}+alpha^2).
double tail_C_symmetric(int n, double alpha);

struct OneSidedStripBounds {
  double C5 = 0.0;  // ||K_t||_{c,0}
  double C6 = 0.0;  // ||K_t||_{0,c}
};

// Rows index the plus (0) and minus (1) blocks.
struct TwoSidedStripBounds {
  double K_c0[2] = {0.0, 0.0};
  double K_0c[2] = {0.0, 0.0};
  double L_c0[2] = {0.0, 0.0};
  double L_0c[2] = {0.0, 0.0};
  double row[2] = {0.0, 0.0};  // row sums of C*, minus row first
  double Cstar = 0.0;
};

OneSidedStripBounds strip_kernel_bounds_one_sided(const PeriodicProfile& g, double c);
TwoSidedStripBounds strip_kernel_bounds_two_sided(const DilationGraph& graph, double c);

double c1_constant(const DilationGraph& graph, int M);
double c3_constant(const DilationGraph& graph);
double c4_constant(const DilationGraph& graph, double c);

struct CertificateConstants {
  Side side = Side::OneSided;
  double c = 0.0;
  int M = 0;
  double C1 = 0.0;
  double C3 = 0.0;
  double C4 = 0.0;
  double C5 = 0.0;  // one-sided only
  double C6 = 0.0;  // one-sided only
};

CertificateConstants certificate_constants(const DilationGraph& graph, double c, int M);

// C4 / (e^{2 pi N c} - 1).
double quadrature_error_bound(double C4, int N, double c);

}  // namespace npspec
