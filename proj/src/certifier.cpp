#include "npspec/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "npspec/parallel.hpp"
#include "npspec/spectra.hpp"

namespace npspec {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

const char* verdict_name(Verdict v) {
  return v == Verdict::Certified ? "CERTIFIED" : "INCONCLUSIVE";
}

WalkTrace resolvent_walk(const ComplexMatrix& A, double rho0, int max_steps) {
  if (!(rho0 > 0.0)) throw std::invalid_argument("rho0 must be positive");
  WalkTrace w;
  w.rho0 = rho0;
  const double target = 4.0 * kPi * rho0;
  double theta = 0.0;
  double total = 0.0;
  for (int step = 0; step <= max_steps; ++step) {
    const cplx mu = step == 0 ? cplx(rho0, 0.0) : std::polar(rho0, theta);
    const ResolventNorm r = resolvent_lower_norm(A, mu);
    if (r.singular) return w;
    w.mus.push_back(mu);
    w.nus.push_back(r.nu);
    if (w.n_k > 0) {
      w.completed = true;
      break;
    }
    total += r.nu;
    theta += r.nu / (2.0 * rho0);
    if (total >= target) w.n_k = static_cast<int>(w.nus.size());
  }
  const std::size_t pairs = w.completed ? w.n_k : (w.nus.empty() ? 0 : w.nus.size() - 1);
  w.R_contribution = std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < pairs; ++l)
    w.R_contribution = std::min(w.R_contribution, w.nus[l] / 4.0 + w.nus[l + 1] / 2.0);
  return w;
}

double resolvent_side(double rho0, double C3, double margin) {
  if (margin + C3 <= 0.0) return -std::numeric_limits<double>::infinity();
  return rho0 * rho0 * margin / (margin + C3);
}

Certificate certify(const DilationGraph& graph, const KernelTable& table, double rho0, double c,
                    int m, const CertifyOptions& opts) {
  Certificate cert;
  cert.rho0 = rho0;
  cert.c = c;
  cert.m = m;
  cert.M = table.M();
  cert.N = table.N();
  cert.k_stride = opts.k_stride;
  cert.graph_digest = graph.digest();

  const StripCheck strip = validate_strip(graph, c);
  cert.strip_ok = strip.ok();
  if (!strip.ok()) {
    for (const auto& v : strip.violations)
      cert.reasons.push_back("strip condition violated: " + v.condition + " (lhs=" + fmt(v.lhs) +
                             ", rhs=" + fmt(v.rhs) + ")");
    return cert;
  }
  cert.constants = certificate_constants(graph, c, table.M());
  cert.B_norm = table.derivative_bound_norm();
  cert.L_c = quadrature_error_bound(cert.constants.C4, table.N(), c);

  const auto ks = sampled_indices(m, opts.k_stride);
  cert.per_t.resize(ks.size());
  parallel_for(ks.size(), opts.workers, [&](std::size_t i) {
    PerT& row = cert.per_t[i];
    row.k = ks[i];
    row.t = bloch_parameter(ks[i], m);
    const ComplexMatrix A = table.assemble(row.t).matrix;
    row.rho_A = spectral_radius(eigenvalues(A));
    const WalkTrace w = resolvent_walk(A, rho0, opts.max_steps);
    row.walked = true;
    row.completed = w.completed;
    row.n_k = w.n_k;
    if (!w.nus.empty()) {
      const std::size_t upto = w.completed ? w.n_k : w.nus.size();
      const auto [lo, hi] = std::minmax_element(w.nus.begin(), w.nus.begin() + upto);
      row.nu_min = *lo;
      row.nu_max = *hi;
    }
    row.R_contribution = w.R_contribution;
  });

  cert.spectral_check_holds = true;
  cert.walks_completed = true;
  cert.R_mMN = std::numeric_limits<double>::infinity();
  for (const PerT& row : cert.per_t) {
    cert.r_max = std::max(cert.r_max, row.rho_A);
    if (!(row.rho_A < rho0)) {
      cert.spectral_check_holds = false;
      cert.reasons.push_back("spectral radius " + fmt(row.rho_A) + " >= rho0 at t=" +
                             fmt(row.t) + " (k=" + std::to_string(row.k) + ")");
    }
    if (!row.completed) {
      cert.walks_completed = false;
      cert.reasons.push_back("resolvent walk incomplete at t=" + fmt(row.t) +
                             " (k=" + std::to_string(row.k) + ")");
    }
    cert.R_mMN = std::min(cert.R_mMN, row.R_contribution);
  }
  if (!std::isfinite(cert.R_mMN)) cert.R_mMN = std::numeric_limits<double>::quiet_NaN();

  cert.margin = cert.R_mMN - cert.constants.C1 - kPi / (2.0 * m) * cert.B_norm;
  cert.R_c = std::isnan(cert.margin) ? cert.margin
                                      : resolvent_side(rho0, cert.constants.C3, cert.margin);
  cert.S_c = cert.L_c - cert.R_c;
  cert.inequality_holds = cert.margin > 0.0 && cert.L_c < cert.R_c;
  if (!cert.inequality_holds)
    cert.reasons.push_back("quadrature bound L_c=" + fmt(cert.L_c) +
                           " is not below resolvent bound R_c=" + fmt(cert.R_c));

  const bool full_grid = opts.k_stride == 1;
  if (!full_grid)
    cert.reasons.push_back("t-grid subsampled with stride " + std::to_string(opts.k_stride) +
                           "; a certificate needs every k");
  if (cert.spectral_check_holds && cert.walks_completed && cert.inequality_holds && full_grid)
    cert.verdict = Verdict::Certified;
  return cert;
}

Certificate certify(const DilationGraph& graph, double rho0, double c, int m, int M, int N,
                    const CertifyOptions& opts) {
  const StripCheck strip = validate_strip(graph, c);
  if (!strip.ok()) {
    Certificate cert;
    cert.rho0 = rho0;
    cert.c = c;
    cert.m = m;
    cert.M = M;
    cert.N = N;
    cert.k_stride = opts.k_stride;
    cert.graph_digest = graph.digest();
    for (const auto& v : strip.violations)
      cert.reasons.push_back("strip condition violated: " + v.condition + " (lhs=" + fmt(v.lhs) +
                             ", rhs=" + fmt(v.rhs) + ")");
    return cert;
  }
  const KernelTable table(graph, N, M, opts.workers);
  return certify(graph, table, rho0, c, m, opts);
}

SynthesizedCertificate certify_synthesized(const std::vector<CornerSpec>& corners, double rho0,
                                           const CertifyOptions& opts) {
  if (corners.empty()) throw std::invalid_argument("synthesis needs at least one corner");
  SynthesizedCertificate out;
  out.S = -std::numeric_limits<double>::infinity();
  bool all = true;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    const CornerSpec& cs = corners[i];
    Certificate cert = certify(cs.graph, rho0, cs.c, cs.m, cs.M, cs.N, opts);
    out.S = std::max(out.S, cert.S_c);
    out.r_max = std::max(out.r_max, cert.r_max);
    if (cert.verdict != Verdict::Certified) {
      all = false;
      for (const auto& r : cert.reasons)
        out.reasons.push_back("corner " + std::to_string(i) + ": " + r);
    }
    out.corners.push_back(std::move(cert));
  }
  if (all && out.S < 0.0 && out.r_max < rho0) out.verdict = Verdict::Certified;
  return out;
}

bool generic_compact_criterion(double R_star, double approx_gap, double product_gap,
                               double rho0) {
  return product_gap < rho0 * (R_star - approx_gap);
}

}  // namespace npspec
