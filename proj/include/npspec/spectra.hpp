#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "npspec/linalg.hpp"
#include "npspec/nystrom.hpp"
#include "npspec/profile.hpp"

namespace npspec {

struct CloudMeta {
  int N = 0;
  int m = 0;
  int M = 0;
  int k_stride = 1;
  std::string t_grid;
  std::string graph_digest;
};

struct SpectrumCloud {
  std::vector<cplx> points;
  CloudMeta meta;
  bool contains_zero() const;
};

struct SpectrumOptions {
  int k_stride = 1;
  int workers = 1;
};

// Bloch parameters t_k = (k - 1/2) pi / m for the sampled k, ascending.
std::vector<int> sampled_indices(int m, int k_stride);
double bloch_parameter(int k, int m);

SpectrumCloud spectrum_approx(const DilationGraph& graph, int N, int m, int M,
                              const SpectrumOptions& opts = {});
SpectrumCloud spectrum_approx(const DilationGraph& graph, const KernelTable& table, int m,
                              const SpectrumOptions& opts = {});

double radius(const SpectrumCloud& cloud);
double radius(const std::vector<cplx>& points);

SpectrumCloud synthesize(const std::vector<DilationGraph>& corners, int N, int m, int M,
                         const SpectrumOptions& opts = {});
SpectrumCloud synthesize(const std::vector<SpectrumCloud>& corner_clouds);

// sup over a in A of the distance from a to B.
double directed_hausdorff(const std::vector<cplx>& A, const std::vector<cplx>& B);
double hausdorff(const std::vector<cplx>& A, const std::vector<cplx>& B);

std::vector<cplx> cone_exact_spectrum(double mu, const std::vector<double>& ys);
double cone_exact_radius(double mu);

void write_cloud_csv(const SpectrumCloud& cloud, std::ostream& out);
void write_cloud_json(const SpectrumCloud& cloud, std::ostream& out);

}  // namespace npspec
