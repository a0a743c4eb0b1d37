#include "npspec/report.hpp"

#include <cmath>

namespace npspec {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json certificate_json(const Certificate& cert) {
  Json j;
  j["verdict"] = verdict_name(cert.verdict);
  j["rho0"] = number(cert.rho0);
  j["c"] = number(cert.c);
  j["m"] = cert.m;
  j["M"] = cert.M;
  j["N"] = cert.N;
  j["k_stride"] = cert.k_stride;
  j["graph_digest"] = cert.graph_digest;
  j["r_max"] = number(cert.r_max);
  j["R_mMN"] = number(cert.R_mMN);
  j["margin"] = number(cert.margin);
  j["L_c"] = number(cert.L_c);
  j["R_c"] = number(cert.R_c);
  j["S_c"] = number(cert.S_c);
  j["constants"] = {{"C1", number(cert.constants.C1)},
                    {"C3", number(cert.constants.C3)},
                    {"C4", number(cert.constants.C4)},
                    {"B_norm", number(cert.B_norm)}};
  if (cert.constants.side == Side::OneSided) {
    j["constants"]["C5"] = number(cert.constants.C5);
    j["constants"]["C6"] = number(cert.constants.C6);
  }
  j["checks"] = {{"strip_ok", cert.strip_ok},
                 {"spectral_check_holds", cert.spectral_check_holds},
                 {"walks_completed", cert.walks_completed},
                 {"inequality_holds", cert.inequality_holds}};
  auto rows = Json::array();
  for (const PerT& r : cert.per_t)
    rows.push_back({{"k", r.k},
                    {"t", number(r.t)},
                    {"rho_A", number(r.rho_A)},
                    {"n_k", r.n_k},
                    {"nu_min", number(r.nu_min)},
                    {"nu_max", number(r.nu_max)}});
  j["per_t"] = std::move(rows);
  j["reasons"] = cert.reasons;
  return j;
}

Json synthesized_json(const SynthesizedCertificate& cert) {
  Json j;
  j["verdict"] = verdict_name(cert.verdict);
  j["S"] = number(cert.S);
  j["r_max"] = number(cert.r_max);
  auto corners = Json::array();
  for (const auto& c : cert.corners) corners.push_back(certificate_json(c));
  j["corners"] = std::move(corners);
  j["reasons"] = cert.reasons;
  return j;
}

Json walk_json(const WalkTrace& walk, double t) {
  Json j;
  j["t"] = number(t);
  j["rho0"] = number(walk.rho0);
  j["n_k"] = walk.n_k;
  j["completed"] = walk.completed;
  j["R_contribution"] = number(walk.R_contribution);
  auto steps = Json::array();
  for (std::size_t l = 0; l < walk.nus.size(); ++l)
    steps.push_back({{"mu_re", walk.mus[l].real()},
                     {"mu_im", walk.mus[l].imag()},
                     {"nu", number(walk.nus[l])}});
  j["steps"] = std::move(steps);
  return j;
}

Json polygon_json(const NumRangePolygon& polygon, const InscribedRadius& radius) {
  Json j;
  j["p"] = polygon.p;
  j["t"] = number(polygon.t);
  j["N"] = polygon.N;
  j["M"] = polygon.M;
  j["n"] = polygon.n;
  j["phase_kept"] = polygon.phase_kept;
  j["C7"] = number(polygon.C7);
  j["R_min"] = number(radius.R_min);
  j["theta_max"] = number(radius.theta_max);
  j["R_star"] = radius.R_star ? number(*radius.R_star) : Json(nullptr);
  if (!radius.R_star) j["reason"] = radius.reason;
  auto v = Json::array();
  for (const auto& z : polygon.vertices) v.push_back({z.real(), z.imag()});
  j["vertices"] = std::move(v);
  return j;
}

}  // namespace npspec
