#include "npspec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "npspec/certifier.hpp"
#include "npspec/nystrom.hpp"
#include "npspec/numrange.hpp"
#include "npspec/parallel.hpp"
#include "npspec/report.hpp"
#include "npspec/spectra.hpp"

namespace npspec {

namespace {

constexpr double kPi = std::numbers::pi;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Job {
  std::string label;
  DilationGraph graph;
  double c = 0.0;
  bool has_c = false;
  int N = 32;
  int m = 200;
  int M = 40;
  int p = 10;
  int n = 100;
  double t = kPi / 2.0;
  int numrange_N = 32;
  int numrange_M = 40;
  std::vector<int> schedule{8, 16, 32, 64};
  int stride = 1;
};

Job resolve(const RunConfig& cfg, const std::string& preset_name) {
  Job job{preset_name, DilationGraph::one_sided(PeriodicProfile::flat(0.5))};
  bool heavy = false;
  if (!cfg.profile_file.empty() && preset_name.empty()) {
    job.label = cfg.profile_file;
    job.graph = load_profile_file(cfg.profile_file);
  } else {
    const Preset pr = make_preset(preset_name, cfg.alpha, cfg.mu);
    job.graph = pr.graph;
    job.c = pr.c;
    job.has_c = true;
    job.N = pr.N;
    job.m = pr.m;
    job.M = pr.M;
    job.p = pr.p;
    job.n = pr.n;
    job.t = pr.t;
    job.numrange_N = pr.numrange_N;
    job.numrange_M = pr.numrange_M;
    job.schedule = pr.schedule;
    heavy = pr.heavy;
  }
  if (cfg.c) {
    job.c = *cfg.c;
    job.has_c = true;
  }
  if (cfg.N) job.N = job.numrange_N = *cfg.N;
  if (cfg.m) job.m = *cfg.m;
  if (cfg.M) job.M = job.numrange_M = *cfg.M;
  if (cfg.p) job.p = *cfg.p;
  if (cfg.n) job.n = *cfg.n;
  if (cfg.t) job.t = *cfg.t;
  if (!cfg.schedule.empty()) job.schedule = cfg.schedule;
  if (cfg.stride) job.stride = *cfg.stride;
  else if (heavy && !cfg.full) job.stride = std::max(1, job.m / 100);
  if (cfg.full) job.stride = 1;

  if (job.N < 1 || job.m < 1 || job.M < 2 || job.p < 0 || job.n < 3 || job.stride < 1)
    throw UsageError("parameters must satisfy N >= 1, m >= 1, M >= 2, p >= 0, n >= 3");
  return job;
}

void require_strip(const Job& job) {
  if (!job.has_c) throw UsageError("--c is required for this command");
  if (!(job.c > 0.0)) throw UsageError("--c must be positive");
  const StripCheck chk = validate_strip(job.graph, job.c);
  if (chk.ok()) return;
  std::ostringstream os;
  os << "strip width c=" << job.c << " is not admissible:";
  for (const auto& v : chk.violations) os << " [" << v.condition << ": " << v.lhs << " vs " << v.rhs << "]";
  throw UsageError(os.str());
}

class Sink {
public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot open output file " + path);
    os_ = &file_;
  }
  std::ostream& operator*() { return *os_; }
  std::ostream* operator->() { return os_; }

private:
  std::ofstream file_;
  std::ostream* os_;
};

std::string format_of(const RunConfig& cfg, const char* fallback) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  if (f != "csv" && f != "json") throw UsageError("--format must be csv or json");
  return f;
}

const std::string& single_preset(const RunConfig& cfg) {
  static const std::string none;
  if (cfg.presets.size() > 1) throw UsageError("this command takes a single --preset");
  if (cfg.presets.empty()) {
    if (cfg.profile_file.empty()) throw UsageError("either --preset or --profile-file is required");
    return none;
  }
  return cfg.presets.front();
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err, int workers) {
  const Job job = resolve(cfg, single_preset(cfg));
  const std::string fmt = format_of(cfg, "csv");
  Sink sink(cfg.output, out);
  if (cfg.t) {
    auto eigs = job.graph.is_flat() ? std::vector<cplx>{}
                                    : eigenvalues(assemble(job.graph, *cfg.t, job.N, job.M).matrix);
    std::sort(eigs.begin(), eigs.end(), [](cplx a, cplx b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    SpectrumCloud cloud;
    cloud.points = eigs;
    cloud.meta = {job.N, 1, job.M, 1, "single t=" + std::to_string(*cfg.t), job.graph.digest()};
    if (fmt == "csv") write_cloud_csv(cloud, *sink);
    else write_cloud_json(cloud, *sink);
    err << "spectral radius " << (eigs.empty() ? 0.0 : radius(eigs)) << "\n";
    return 0;
  }
  const SpectrumCloud cloud = spectrum_approx(job.graph, job.N, job.m, job.M, {job.stride, workers});
  if (fmt == "csv") write_cloud_csv(cloud, *sink);
  else write_cloud_json(cloud, *sink);
  err << "points " << cloud.points.size() << ", radius " << radius(cloud) << "\n";
  return 0;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err, int workers) {
  const Job job = resolve(cfg, single_preset(cfg));
  require_strip(job);
  const std::string fmt = format_of(cfg, "json");
  Sink sink(cfg.output, out);
  if (cfg.t) {
    const ComplexMatrix A = assemble(job.graph, *cfg.t, job.N, job.M).matrix;
    const double rho = spectral_radius(eigenvalues(A));
    Json j;
    j["rho_A"] = number(rho);
    if (rho < cfg.rho0) j["walk"] = walk_json(resolvent_walk(A, cfg.rho0), *cfg.t);
    *sink << j.dump(2) << "\n";
    return 0;
  }
  const Certificate cert =
      certify(job.graph, cfg.rho0, job.c, job.m, job.M, job.N, {job.stride, workers});
  if (fmt == "json") {
    *sink << certificate_json(cert).dump(2) << "\n";
  } else {
    *sink << "k,t,rho_A,n_k,nu_min,nu_max\n";
    sink->precision(17);
    for (const auto& r : cert.per_t)
      *sink << r.k << "," << r.t << "," << r.rho_A << "," << r.n_k << "," << r.nu_min << ","
            << r.nu_max << "\n";
  }
  err << verdict_name(cert.verdict) << ": r_max=" << cert.r_max << " L_c=" << cert.L_c
      << " R_c=" << cert.R_c << "\n";
  for (const auto& r : cert.reasons) err << "  " << r << "\n";
  return cert.verdict == Verdict::Certified ? 0 : 2;
}

int cmd_numrange(const RunConfig& cfg, std::ostream& out, std::ostream& err, int workers) {
  const Job job = resolve(cfg, single_preset(cfg));
  require_strip(job);
  const std::string fmt = format_of(cfg, "json");
  std::vector<std::pair<std::string, const PeriodicProfile*>> halves{{"plus", &job.graph.plus}};
  if (job.graph.two_sided_graph()) halves.emplace_back("minus", &*job.graph.minus);

  Json report;
  report["graph_digest"] = job.graph.digest();
  auto rows = Json::array();
  int best = -1;
  double best_r = 0.0;
  std::vector<NumRangePolygon> polys;
  for (std::size_t h = 0; h < halves.size(); ++h) {
    const PeriodicProfile& g = *halves[h].second;
    const NystromMatrix A = assemble(DilationGraph::one_sided(g), job.t, job.numrange_N, job.numrange_M);
    NumRangePolygon poly = johnson_polygon(restricted_matrix(A, job.p, cfg.keep_phase), job.n, workers);
    poly.p = job.p;
    poly.t = job.t;
    poly.N = job.numrange_N;
    poly.M = job.numrange_M;
    poly.phase_kept = cfg.keep_phase;
    poly.C7 = c7_constant(g, job.c, job.p, job.numrange_N, job.numrange_M);
    const InscribedRadius ir = inscribed_radius(poly, poly.C7);
    Json row = polygon_json(poly, ir);
    row["half"] = halves[h].first;
    rows.push_back(std::move(row));
    if (ir.R_star && *ir.R_star > best_r) {
      best_r = *ir.R_star;
      best = static_cast<int>(h);
    }
    polys.push_back(std::move(poly));
  }
  report["R_star"] = best >= 0 ? Json(best_r) : Json(nullptr);
  report["best_half"] = best >= 0 ? Json(halves[best].first) : Json(nullptr);
  report["halves"] = std::move(rows);
  Sink sink(cfg.output, out);
  if (fmt == "json") *sink << report.dump(2) << "\n";
  else write_polygon_csv(polys[best >= 0 ? best : 0], *sink);
  if (best >= 0) err << "R* = " << best_r << " (" << halves[best].first << " half)\n";
  else err << "R* = NONE\n";
  return 0;
}

int cmd_synthesize(const RunConfig& cfg, std::ostream& out, std::ostream& err, int workers) {
  std::vector<std::string> names = cfg.presets;
  if (names.empty() && !cfg.profile_file.empty()) names.push_back("");
  if (names.empty()) throw UsageError("synthesize needs at least one --preset");
  std::vector<Job> jobs;
  for (const auto& nm : names) jobs.push_back(resolve(cfg, nm));
  Sink sink(cfg.output, out);
  if (cfg.certify) {
    std::vector<CornerSpec> corners;
    for (const Job& j : jobs) {
      require_strip(j);
      corners.push_back({j.graph, j.c, j.m, j.M, j.N});
    }
    const int stride = jobs.front().stride;
    const SynthesizedCertificate s = certify_synthesized(corners, cfg.rho0, {stride, workers});
    *sink << synthesized_json(s).dump(2) << "\n";
    err << verdict_name(s.verdict) << ": S=" << s.S << " r_max=" << s.r_max << "\n";
    return s.verdict == Verdict::Certified ? 0 : 2;
  }
  std::vector<SpectrumCloud> clouds;
  for (const Job& j : jobs) clouds.push_back(spectrum_approx(j.graph, j.N, j.m, j.M, {j.stride, workers}));
  const SpectrumCloud cloud = synthesize(clouds);
  if (format_of(cfg, "csv") == "csv") write_cloud_csv(cloud, *sink);
  else write_cloud_json(cloud, *sink);
  err << "points " << cloud.points.size() << ", radius " << radius(cloud) << "\n";
  return 0;
}

int cmd_cone_oracle(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const double mu = cfg.mu.value_or(10.0);
  const std::string fmt = format_of(cfg, "json");
  Sink sink(cfg.output, out);
  const int samples = cfg.n.value_or(8001);
  std::vector<double> ys(samples);
  for (int i = 0; i < samples; ++i) ys[i] = samples == 1 ? 0.0 : -40.0 + 80.0 * i / (samples - 1);
  if (fmt == "csv") {
    SpectrumCloud cloud;
    cloud.points = cone_exact_spectrum(mu, ys);
    write_cloud_csv(cloud, *sink);
    return 0;
  }
  Json j;
  j["mu"] = mu;
  j["radius"] = cone_exact_radius(mu);
  *sink << j.dump(2) << "\n";
  return 0;
}

int cmd_converge(const RunConfig& cfg, std::ostream& out, std::ostream& err, int workers) {
  const Job job = resolve(cfg, single_preset(cfg));
  require_strip(job);
  if (job.schedule.empty()) throw UsageError("empty N schedule");
  const std::string fmt = format_of(cfg, "csv");
  std::vector<Certificate> rows;
  for (int N : job.schedule) {
    if (N < 1) throw UsageError("schedule entries must be positive");
    const KernelTable table(job.graph, N, job.M, workers);
    rows.push_back(certify(job.graph, table, cfg.rho0, job.c, job.m, {job.stride, workers}));
    err << "N=" << N << " L_c=" << rows.back().L_c << " R_c=" << rows.back().R_c << "\n";
  }
  int first = -1;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].inequality_holds) {
      first = static_cast<int>(i);
      break;
    }
  Sink sink(cfg.output, out);
  if (fmt == "csv") {
    sink->precision(17);
    *sink << "N,L_c,R_c,margin,r_max,inequality_holds,verdict,first_crossing\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      *sink << r.N << "," << r.L_c << "," << r.R_c << "," << r.margin << "," << r.r_max << ","
            << (r.inequality_holds ? 1 : 0) << "," << verdict_name(r.verdict) << ","
            << (static_cast<int>(i) == first ? 1 : 0) << "\n";
    }
  } else {
    Json j = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      j.push_back({{"N", r.N},
                   {"L_c", number(r.L_c)},
                   {"R_c", number(r.R_c)},
                   {"margin", number(r.margin)},
                   {"r_max", number(r.r_max)},
                   {"inequality_holds", r.inequality_holds},
                   {"verdict", verdict_name(r.verdict)},
                   {"first_crossing", static_cast<int>(i) == first}});
    }
    *sink << j.dump(2) << "\n";
  }
  const bool any = std::any_of(rows.begin(), rows.end(),
                               [](const Certificate& r) { return r.verdict == Verdict::Certified; });
  return any ? 0 : 2;
}

}  // namespace

Preset make_preset(const std::string& name, std::optional<double> alpha, std::optional<double> mu) {
  Preset p;
  p.name = name;
  if (name == "example1") {
    const double a = alpha.value_or(0.75);
    p.graph = DilationGraph::one_sided(PeriodicProfile::sine_squared(a));
    p.c = 0.013;
    p.N = 512;
    p.m = 16000;
    p.M = 100;
    p.t = kPi / 18.0;
    p.numrange_N = 512;
    p.numrange_M = 100;
    p.schedule = {8, 16, 32, 64, 128, 256, 512};
    p.heavy = true;
  } else if (name == "example2" || name == "cone") {
    const double a = alpha.value_or(0.875);
    const double u = mu.value_or(10.0);
    p.graph = DilationGraph::two_sided(PeriodicProfile::constant(a, u), PeriodicProfile::constant(a, u));
    p.c = 0.57;
    p.N = 16;
    p.m = 2000;
    p.M = 200;
    p.t = kPi / 2.0;
    p.numrange_N = 16;
    p.numrange_M = 200;
    p.schedule = {2, 4, 8, 16};
  } else if (name == "example3" || name == "example4") {
    const double a = alpha.value_or(2.0 / 3.0);
    const bool ex3 = name == "example3";
    p.graph = DilationGraph::two_sided(PeriodicProfile::sine_squared(a),
                                       ex3 ? PeriodicProfile::sine_squared(a) : PeriodicProfile::flat(a));
    p.c = 0.019;
    p.N = 256;
    p.m = ex3 ? 10000 : 5000;
    p.M = ex3 ? 60 : 50;
    p.t = kPi / 13.0;
    p.numrange_N = 256;
    p.numrange_M = p.M;
    p.schedule = {2, 4, 8, 16, 32, 64, 128, 256};
    p.heavy = true;
  } else if (name == "flat") {
    p.graph = DilationGraph::one_sided(PeriodicProfile::flat(alpha.value_or(0.75)));
    p.c = 0.013;
    p.N = 8;
    p.m = 10;
    p.M = 2;
    p.numrange_N = 8;
    p.numrange_M = 2;
    p.schedule = {2, 4, 8};
  } else {
    throw UsageError("unknown preset '" + name + "'");
  }
  return p;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const int workers = resolve_workers(cfg.threads);
    if (!(cfg.rho0 > 0.0)) throw UsageError("--rho0 must be positive");
    if (cfg.command == "spectrum") return cmd_spectrum(cfg, out, err, workers);
    if (cfg.command == "certify") return cmd_certify(cfg, out, err, workers);
    if (cfg.command == "numrange") return cmd_numrange(cfg, out, err, workers);
    if (cfg.command == "synthesize") return cmd_synthesize(cfg, out, err, workers);
    if (cfg.command == "cone-oracle") return cmd_cone_oracle(cfg, out, err);
    if (cfg.command == "converge") return cmd_converge(cfg, out, err, workers);
    throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Essential spectra and spectral-radius certificates for double-layer operators "
               "on dilation-invariant graphs"};
  app.require_subcommand(1);
  RunConfig cfg;
  double alpha = 0, mu = 0, c = 0, t = 0;
  int N = 0, m = 0, M = 0, p = 0, n = 0, stride = 0;

  const char* commands[][2] = {
      {"spectrum", "Spectrum cloud over the Bloch grid"},
      {"certify", "Certify rho_ess < rho0"},
      {"numrange", "Johnson polygon and inscribed disc of the numerical range"},
      {"synthesize", "Union of corner spectra, optionally certified"},
      {"cone-oracle", "Exact spectrum of the cone"},
      {"converge", "Certificate quantities along an N schedule"}};
  struct Bound {
    CLI::App* sub;
    CLI::Option *alpha, *mu, *c, *t, *N, *m, *M, *p, *n, *stride;
  };
  std::vector<Bound> subs;
  for (auto& cmd : commands) {
    CLI::App* s = app.add_subcommand(cmd[0], cmd[1]);
    Bound b{};
    b.sub = s;
    s->add_option("--preset", cfg.presets, "example1, example2|cone, example3, example4, flat");
    s->add_option("--profile-file", cfg.profile_file, "Profile file (key-value format)");
    b.alpha = s->add_option("--alpha", alpha, "Dilation ratio");
    b.mu = s->add_option("--mu", mu, "Cone slope");
    b.N = s->add_option("--N", N, "Quadrature nodes");
    b.m = s->add_option("--m", m, "Bloch grid size");
    b.M = s->add_option("--M", M, "Series truncation");
    b.p = s->add_option("--p", p, "Trigonometric degree");
    b.n = s->add_option("--n", n, "Polygon directions (cone-oracle: samples)");
    b.c = s->add_option("--c", c, "Strip half-width");
    b.t = s->add_option("--t", t, "Single Bloch parameter");
    b.stride = s->add_option("--stride", stride, "Use every stride-th k, ending at k=m");
    s->add_option("--rho0", cfg.rho0, "Target radius");
    s->add_option("--schedule", cfg.schedule, "N values for converge")->delimiter(',');
    s->add_option("--output", cfg.output, "Output file (default stdout)");
    s->add_option("--threads", cfg.threads, "Worker threads");
    s->add_option("--format", cfg.format, "csv or json");
    s->add_flag("--full", cfg.full, "Use every k of the Bloch grid");
    s->add_flag("--keep-phase", cfg.keep_phase, "Keep the phase factor in the restricted matrix");
    s->add_flag("--certify", cfg.certify, "Certify every corner (synthesize)");
    subs.push_back(b);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  for (const Bound& b : subs) {
    if (!b.sub->parsed()) continue;
    cfg.command = b.sub->get_name();
    if (b.alpha->count()) cfg.alpha = alpha;
    if (b.mu->count()) cfg.mu = mu;
    if (b.c->count()) cfg.c = c;
    if (b.t->count()) cfg.t = t;
    if (b.N->count()) cfg.N = N;
    if (b.m->count()) cfg.m = m;
    if (b.M->count()) cfg.M = M;
    if (b.p->count()) cfg.p = p;
    if (b.n->count()) cfg.n = n;
    if (b.stride->count()) cfg.stride = stride;
  }
  return run(cfg, out, err);
}

}  // namespace npspec
