#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "npspec/spectra.hpp"

using namespace npspec;

namespace {

DilationGraph cone(double mu) {
  return DilationGraph::two_sided(PeriodicProfile::constant(0.875, mu),
                                  PeriodicProfile::constant(0.875, mu));
}

std::set<std::pair<std::uint64_t, std::uint64_t>> bits(const std::vector<cplx>& pts) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> s;
  for (cplx z : pts)
    s.insert({std::bit_cast<std::uint64_t>(z.real() + 0.0), std::bit_cast<std::uint64_t>(z.imag() + 0.0)});
  return s;
}

double brute_directed(const std::vector<cplx>& A, const std::vector<cplx>& B) {
  double worst = 0.0;
  for (cplx a : A) {
    double best = INFINITY;
    for (cplx b : B) best = std::min(best, std::abs(a - b));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

TEST_CASE("t grid") {
  CHECK(sampled_indices(10, 1).size() == 10);
  CHECK(sampled_indices(10, 3) == std::vector<int>{1, 4, 7, 10});
  CHECK(sampled_indices(10, 20) == std::vector<int>{10});
  CHECK_THROWS(sampled_indices(0, 1));
  CHECK_THROWS(sampled_indices(5, 0));
  CHECK(bloch_parameter(1, 4) == doctest::Approx(std::numbers::pi / 8));
  CHECK(bloch_parameter(4, 4) == doctest::Approx(7 * std::numbers::pi / 8));
}

TEST_CASE("flat graph spectrum is the origin") {
  const SpectrumCloud c = spectrum_approx(DilationGraph::one_sided(PeriodicProfile::flat(0.75)), 8, 10, 2);
  REQUIRE(c.points.size() == 1);
  CHECK(c.points[0] == cplx(0, 0));
  CHECK(c.contains_zero());
  CHECK(radius(c) == 0.0);
}

TEST_CASE("radius") {
  CHECK(radius(std::vector<cplx>{0.0, cplx(3, 4), -1.0}) == 5.0);
  CHECK_THROWS(radius(std::vector<cplx>{}));
}

TEST_CASE("cloud is closed under conjugation and ordered deterministically") {
  const auto g = DilationGraph::one_sided(PeriodicProfile::sine_squared(0.75));
  const SpectrumCloud c = spectrum_approx(g, 8, 10, 20);
  CHECK(c.points.size() == 1 + 2 * 10 * 8);
  CHECK(c.points.front() == cplx(0, 0));
  const auto s = bits(c.points);
  for (cplx z : c.points) {
    const cplx w = std::conj(z);
    CHECK(s.count({std::bit_cast<std::uint64_t>(w.real() + 0.0),
                   std::bit_cast<std::uint64_t>(w.imag() + 0.0)}) == 1);
  }
  SpectrumOptions par;
  par.workers = 3;
  CHECK(spectrum_approx(g, 8, 10, 20, par).points == c.points);
}

TEST_CASE("synthesis") {
  const SpectrumCloud a = spectrum_approx(cone(1.0), 8, 20, 60);
  const SpectrumCloud b = spectrum_approx(cone(2.0), 8, 20, 60);
  SUBCASE("idempotent") {
    const SpectrumCloud aa = synthesize(std::vector<SpectrumCloud>{a, a});
    CHECK(bits(aa.points) == bits(a.points));
    CHECK(aa.points.size() == bits(a.points).size());
  }
  SUBCASE("union of cones") {
    const SpectrumCloud u = synthesize(std::vector<SpectrumCloud>{a, b});
    CHECK(radius(u) == std::max(radius(a), radius(b)));
    CHECK(radius(u) > radius(a));
    CHECK(radius(u) <= cone_exact_radius(2.0) + 1e-3);
    const SpectrumCloud v = synthesize(std::vector<DilationGraph>{cone(1.0), cone(2.0)}, 8, 20, 60);
    CHECK(v.points == u.points);
  }
  CHECK_THROWS(synthesize(std::vector<SpectrumCloud>{}));
}

TEST_CASE("Hausdorff distance") {
  const std::vector<cplx> o{0.0}, p{cplx(3, 4)}, two{0.0, 1.0};
  CHECK(hausdorff(o, p) == 5.0);
  CHECK(directed_hausdorff(two, o) == 1.0);
  CHECK(directed_hausdorff(o, two) == 0.0);
  CHECK(hausdorff(two, o) == hausdorff(o, two));
  CHECK(hausdorff(two, two) == 0.0);

  std::mt19937 rng(21);
  std::normal_distribution<double> d;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<cplx> A(200), B(150);
    for (auto& z : A) z = cplx(d(rng), d(rng));
    for (auto& z : B) z = cplx(d(rng), 0.1 * d(rng));
    CHECK(directed_hausdorff(A, B) == doctest::Approx(brute_directed(A, B)).epsilon(1e-15));
    CHECK(directed_hausdorff(B, A) == doctest::Approx(brute_directed(B, A)).epsilon(1e-15));
  }
  CHECK_THROWS(hausdorff({}, o));
}

TEST_CASE("exact cone spectrum") {
  for (double mu : {0.5, 1.0, 10.0}) {
    const double r = cone_exact_radius(mu);
    CHECK(r == doctest::Approx(mu / (2 * std::sqrt(1 + mu * mu))));
    std::vector<double> ys;
    for (int i = -400; i <= 400; ++i) ys.push_back(i * 0.1);
    const auto pts = cone_exact_spectrum(mu, ys);
    CHECK(pts.size() == 1 + 2 * ys.size());
    CHECK(radius(pts) == doctest::Approx(r).epsilon(1e-14));
  }
  CHECK(cone_exact_spectrum(0.0, {1.0, 2.0}).size() == 1);
}

TEST_CASE("discrete cone spectrum approaches the exact radius") {
  const SpectrumCloud c = spectrum_approx(cone(10.0), 16, 2000, 200, {1, 4});
  CHECK(std::abs(radius(c) - cone_exact_radius(10.0)) <= 1e-3);
}

TEST_CASE("cloud writers") {
  const SpectrumCloud c = spectrum_approx(cone(1.0), 4, 3, 10);
  std::ostringstream csv, json;
  write_cloud_csv(c, csv);
  write_cloud_json(c, json);
  CHECK(csv.str().rfind("re,im\n0,0\n", 0) == 0);
  const std::string j = json.str();
  CHECK(j.find("\"meta\"") != std::string::npos);
  CHECK(j.find("\"radius\"") != std::string::npos);
  CHECK(j.find("\"k_stride\":1") != std::string::npos);
}
