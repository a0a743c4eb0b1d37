#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "npspec/cli.hpp"
#include "npspec/spectra.hpp"

using namespace npspec;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "npspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int shell_status(const std::string& args) {
  const std::string cmd = std::string(NPSPEC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int s = std::system(cmd.c_str());
  return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("npspec_test_" + name);
}

}  // namespace

TEST_CASE("flat preset spectrum is the origin") {
  const Result r = call({"spectrum", "--preset", "flat"});
  CHECK(r.code == 0);
  CHECK(r.out == "re,im\n0,0\n");
}

TEST_CASE("cone certificate") {
  const Result r = call({"certify", "--preset", "cone", "--threads", "4"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "CERTIFIED");
  CHECK(j["r_max"].get<double>() < 0.5);
  CHECK(r.err.find("CERTIFIED") != std::string::npos);
}

TEST_CASE("cone oracle radius") {
  const Result r = call({"cone-oracle", "--mu", "10"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["radius"].get<double>() == doctest::Approx(cone_exact_radius(10.0)).epsilon(1e-15));
  const Result csv = call({"cone-oracle", "--mu", "1", "--format", "csv", "--n", "11"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("re,im\n", 0) == 0);
}

TEST_CASE("single-t certify reports the walk") {
  const Result r = call({"certify", "--preset", "cone", "--t", "1.0"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("rho_A"));
  CHECK(j.contains("walk"));
}

TEST_CASE("converge table") {
  const Result r = call({"converge", "--preset", "cone", "--schedule", "4,8", "--m", "50"});
  CHECK(r.code == 2);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  CHECK(line == "N,L_c,R_c,margin,r_max,inequality_holds,verdict,first_crossing");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("synthesize unions corners") {
  const Result r = call({"synthesize", "--preset", "flat", "--preset", "cone", "--N", "4", "--m",
                         "5", "--M", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("re,im\n0,0\n", 0) == 0);
}

TEST_CASE("errors exit with status 1") {
  CHECK(call({"spectrum", "--preset", "nosuch"}).code == 1);
  CHECK(call({"spectrum"}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"spectrum", "--preset", "flat", "--format", "xml"}).code == 1);

  const auto bad = temp_file("bad_profile.txt");
  std::ofstream(bad) << "alpha 0.75\nfourier\n1 0.5\n";
  CHECK(call({"spectrum", "--profile-file", bad.string()}).code == 1);
  CHECK(call({"spectrum", "--profile-file", temp_file("missing.txt").string()}).code == 1);

  const Result wide = call({"certify", "--preset", "example1", "--c", "0.5"});
  CHECK(wide.code == 1);
  CHECK(wide.err.find("strip") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("profile file drives the spectrum") {
  const auto path = temp_file("cone_profile.txt");
  std::ofstream(path) << "# cone with slope 2\nalpha = 0.875\nside two\nfourier plus\n0 2 0\nend\n"
                         "fourier minus\n0 2 0\nend\n";
  const Result r = call({"spectrum", "--profile-file", path.string(), "--N", "4", "--m", "3",
                         "--M", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("re,im\n0,0\n", 0) == 0);
  std::filesystem::remove(path);
}

TEST_CASE("reruns are byte-identical") {
  const std::vector<std::string> args{"spectrum", "--preset", "cone", "--N", "8", "--m", "20",
                                      "--format", "json"};
  const Result a = call(args);
  auto par = args;
  par.insert(par.end(), {"--threads", "3"});
  const Result b = call(par);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("installed binary exit codes") {
  CHECK(shell_status("spectrum --preset flat") == 0);
  CHECK(shell_status("certify --preset cone --threads 4") == 0);
  CHECK(shell_status("certify --preset cone --stride 10") == 2);
  CHECK(shell_status("spectrum --preset nosuch") == 1);
}
