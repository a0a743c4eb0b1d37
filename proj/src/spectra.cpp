#include "npspec/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "npspec/parallel.hpp"

namespace npspec {

namespace {

bool lex_less(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::string grid_description(int m, int k_stride) {
  std::string s = "t_k=(k-1/2)pi/" + std::to_string(m) + ", k=1.." + std::to_string(m);
  if (k_stride > 1) s += " stride " + std::to_string(k_stride) + " ending at k=m";
  return s + ", with -t_k";
}

}  // namespace

bool SpectrumCloud::contains_zero() const {
  return std::any_of(points.begin(), points.end(), [](const cplx& z) { return z == 0.0; });
}

std::vector<int> sampled_indices(int m, int k_stride) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (k_stride < 1) throw std::invalid_argument("k stride must be positive");
  std::vector<int> ks;
  for (int k = m; k >= 1; k -= k_stride) ks.push_back(k);
  std::reverse(ks.begin(), ks.end());
  return ks;
}

double bloch_parameter(int k, int m) { return (k - 0.5) * std::numbers::pi / m; }

SpectrumCloud spectrum_approx(const DilationGraph& graph, const KernelTable& table, int m,
                              const SpectrumOptions& opts) {
  const auto ks = sampled_indices(m, opts.k_stride);
  std::vector<std::vector<cplx>> eigs(ks.size());
  parallel_for(ks.size(), opts.workers, [&](std::size_t i) {
    const double t = bloch_parameter(ks[i], m);
    try {
      eigs[i] = eigenvalues(table.assemble(t).matrix);
    } catch (const std::runtime_error& e) {
      throw std::runtime_error(std::string(e.what()) + " at t=" + std::to_string(t));
    }
    std::sort(eigs[i].begin(), eigs[i].end(), lex_less);
  });

  SpectrumCloud cloud;
  cloud.meta = {table.N(), m, table.M(), opts.k_stride, grid_description(m, opts.k_stride),
                graph.digest()};
  std::size_t total = 1;
  for (const auto& e : eigs) total += 2 * e.size();
  cloud.points.reserve(total);
  cloud.points.push_back(0.0);
  for (std::size_t i = eigs.size(); i-- > 0;) {
    std::vector<cplx> c(eigs[i].size());
    std::transform(eigs[i].begin(), eigs[i].end(), c.begin(), [](cplx z) { return std::conj(z); });
    std::sort(c.begin(), c.end(), lex_less);
    cloud.points.insert(cloud.points.end(), c.begin(), c.end());
  }
  for (const auto& e : eigs) cloud.points.insert(cloud.points.end(), e.begin(), e.end());
  return cloud;
}

SpectrumCloud spectrum_approx(const DilationGraph& graph, int N, int m, int M,
                              const SpectrumOptions& opts) {
  if (graph.is_flat()) {
    SpectrumCloud cloud;
    cloud.meta = {N, m, M, opts.k_stride, grid_description(m, opts.k_stride), graph.digest()};
    cloud.points = {0.0};
    return cloud;
  }
  const KernelTable table(graph, N, M, opts.workers);
  return spectrum_approx(graph, table, m, opts);
}

double radius(const std::vector<cplx>& points) {
  if (points.empty()) throw std::invalid_argument("radius of an empty cloud");
  double r = 0.0;
  for (const auto& z : points) r = std::max(r, std::abs(z));
  return r;
}

double radius(const SpectrumCloud& cloud) { return radius(cloud.points); }

SpectrumCloud synthesize(const std::vector<SpectrumCloud>& corner_clouds) {
  if (corner_clouds.empty()) throw std::invalid_argument("synthesis needs at least one corner");
  struct Key {
    std::uint64_t re, im;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.re * 1000003u ^ k.im; }
  };
  auto key = [](const cplx& z) {
    return Key{std::bit_cast<std::uint64_t>(z.real()), std::bit_cast<std::uint64_t>(z.imag())};
  };
  SpectrumCloud out;
  out.meta = corner_clouds.front().meta;
  out.points.push_back(0.0);
  std::unordered_set<Key, KeyHash> seen{key(0.0)};
  for (std::size_t c = 0; c < corner_clouds.size(); ++c) {
    std::unordered_set<Key, KeyHash> fresh;
    if (c > 0) out.meta.graph_digest += "+" + corner_clouds[c].meta.graph_digest;
    for (const auto& z : corner_clouds[c].points) {
      if (z == 0.0) continue;
      const Key k = key(z);
      if (seen.count(k)) continue;
      fresh.insert(k);
      out.points.push_back(z);
    }
    seen.insert(fresh.begin(), fresh.end());
  }
  return out;
}

SpectrumCloud synthesize(const std::vector<DilationGraph>& corners, int N, int m, int M,
                         const SpectrumOptions& opts) {
  std::vector<SpectrumCloud> clouds;
  for (const auto& g : corners) clouds.push_back(spectrum_approx(g, N, m, M, opts));
  return synthesize(clouds);
}

double directed_hausdorff(const std::vector<cplx>& A, const std::vector<cplx>& B) {
  if (A.empty() || B.empty()) throw std::invalid_argument("Hausdorff distance of empty set");
  std::vector<cplx> b = B;
  std::sort(b.begin(), b.end(), lex_less);
  double worst = 0.0;
  for (const auto& a : A) {
    auto it = std::lower_bound(b.begin(), b.end(), a, lex_less);
    double best2 = INFINITY;
    const double bar2 = worst * worst;
    auto up = it;
    auto dn = it;
    bool go_up = up != b.end(), go_dn = dn != b.begin();
    while ((go_up || go_dn) && best2 > bar2) {
      if (go_up) {
        const double dx = up->real() - a.real();
        if (dx * dx >= best2) {
          go_up = false;
        } else {
          best2 = std::min(best2, std::norm(*up - a));
          go_up = ++up != b.end();
        }
      }
      if (go_dn) {
        auto prev = std::prev(dn);
        const double dx = a.real() - prev->real();
        if (dx * dx >= best2) {
          go_dn = false;
        } else {
          best2 = std::min(best2, std::norm(*prev - a));
          dn = prev;
          go_dn = dn != b.begin();
        }
      }
    }
    if (best2 > bar2) worst = std::sqrt(best2);
  }
  return worst;
}

double hausdorff(const std::vector<cplx>& A, const std::vector<cplx>& B) {
  return std::max(directed_hausdorff(A, B), directed_hausdorff(B, A));
}

std::vector<cplx> cone_exact_spectrum(double mu, const std::vector<double>& ys) {
  std::vector<cplx> out{0.0};
  if (mu == 0.0) return out;
  const double a = std::atan(std::abs(mu));
  const double h = std::numbers::pi / 2.0;
  for (double y : ys) {
    const cplx s(1.0, -y);
    const cplx w = std::sin(a * s) / (2.0 * std::sin(h * s));
    out.push_back(w);
    out.push_back(-w);
  }
  return out;
}

double cone_exact_radius(double mu) { return std::abs(mu) / (2.0 * std::sqrt(1.0 + mu * mu)); }

void write_cloud_csv(const SpectrumCloud& cloud, std::ostream& out) {
  out << "re,im\n";
  out.precision(17);
  for (const auto& z : cloud.points) out << z.real() << "," << z.imag() << "\n";
}

void write_cloud_json(const SpectrumCloud& cloud, std::ostream& out) {
  nlohmann::ordered_json j;
  j["meta"] = {{"N", cloud.meta.N},
               {"m", cloud.meta.m},
               {"M", cloud.meta.M},
               {"k_stride", cloud.meta.k_stride},
               {"t_grid", cloud.meta.t_grid},
               {"graph_digest", cloud.meta.graph_digest}};
  j["radius"] = radius(cloud);
  auto pts = nlohmann::ordered_json::array();
  for (const auto& z : cloud.points) pts.push_back({z.real(), z.imag()});
  j["points"] = std::move(pts);
  out << j.dump() << "\n";
}

}  // namespace npspec
