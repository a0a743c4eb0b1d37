#pragma once

#include <optional>
#include <string>
#include <vector>

#include "npspec/linalg.hpp"
#include "npspec/nystrom.hpp"
#include "npspec/profile.hpp"

namespace npspec {

// T_{jk} = (1/N) sum_{m,n} A(m,n) e_k(x_n) conj(e_j(x_m)), j,k = -p..p.
ComplexMatrix restricted_matrix(const NystromMatrix& A, int p, bool keep_phase = false);
ComplexMatrix restricted_matrix(const PeriodicProfile& g, int p, double t, int N, int M,
                                bool keep_phase = false);

struct NumRangePolygon {
  std::vector<cplx> vertices;  // n + 1 entries, last equals first
  std::vector<double> support;  // lambda_l
  int p = 0;
  double t = 0.0;
  int N = 0;
  int M = 0;
  int n = 0;
  double C7 = 0.0;
  bool phase_kept = false;
};

NumRangePolygon johnson_polygon(const ComplexMatrix& T, int n, int workers = 1);

struct InscribedRadius {
  std::optional<double> R_star;
  double R_min = 0.0;
  double theta_max = 0.0;
  std::string reason;
};

InscribedRadius inscribed_radius(const NumRangePolygon& polygon, double C7);

double c7_constant(const PeriodicProfile& g, double c, int p, int N, int M);

void write_polygon_csv(const NumRangePolygon& polygon, std::ostream& out);

}  // namespace npspec
