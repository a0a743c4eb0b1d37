#pragma once

#include <string>
#include <vector>

#include "npspec/bounds.hpp"
#include "npspec/linalg.hpp"
#include "npspec/nystrom.hpp"
#include "npspec/profile.hpp"

namespace npspec {

struct WalkTrace {
  double rho0 = 0.0;
  std::vector<cplx> mus;
  std::vector<double> nus;
  int n_k = 0;
  bool completed = false;
  // min over l <= n_k of nu_l/4 + nu_{l+1}/2 (over the computed pairs if incomplete,
  // 0 if the walk meets an eigenvalue)
  double R_contribution = 0.0;
};

inline constexpr int kDefaultMaxSteps = 10000;

WalkTrace resolvent_walk(const ComplexMatrix& A, double rho0, int max_steps = kDefaultMaxSteps);

enum class Verdict { Certified, Inconclusive };
const char* verdict_name(Verdict v);

struct PerT {
  int k = 0;
  double t = 0.0;
  double rho_A = 0.0;
  int n_k = 0;
  double nu_min = 0.0;
  double nu_max = 0.0;
  double R_contribution = 0.0;
  bool walked = false;
  bool completed = false;
};

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  double rho0 = 0.5;
  double c = 0.0;
  int m = 0;
  int M = 0;
  int N = 0;
  int k_stride = 1;
  std::string graph_digest;
  double r_max = 0.0;
  double R_mMN = 0.0;
  double margin = 0.0;  // R_mMN - C1(M) - (pi/2m) ||B_N^M||
  double L_c = 0.0;
  double R_c = 0.0;
  double S_c = 0.0;
  double B_norm = 0.0;
  CertificateConstants constants;
  bool strip_ok = false;
  bool spectral_check_holds = false;
  bool walks_completed = false;
  bool inequality_holds = false;
  std::vector<PerT> per_t;
  std::vector<std::string> reasons;
};

struct CertifyOptions {
  int k_stride = 1;
  int workers = 1;
  int max_steps = kDefaultMaxSteps;
};

Certificate certify(const DilationGraph& graph, double rho0, double c, int m, int M, int N,
                    const CertifyOptions& opts = {});
// Reuses a table built for (graph, N, M).
Certificate certify(const DilationGraph& graph, const KernelTable& table, double rho0, double c,
                    int m, const CertifyOptions& opts = {});

// rho0^2 (1 + C3 / margin)^{-1}; -inf when margin <= -C3.
double resolvent_side(double rho0, double C3, double margin);

struct CornerSpec {
  DilationGraph graph;
  double c = 0.0;
  int m = 0;
  int M = 0;
  int N = 0;
};

struct SynthesizedCertificate {
  Verdict verdict = Verdict::Inconclusive;
  double S = 0.0;
  double r_max = 0.0;
  std::vector<Certificate> corners;
  std::vector<std::string> reasons;
};

SynthesizedCertificate certify_synthesized(const std::vector<CornerSpec>& corners, double rho0,
                                           const CertifyOptions& opts = {});

bool generic_compact_criterion(double R_star, double approx_gap, double product_gap,
                               double rho0);

}  // namespace npspec
