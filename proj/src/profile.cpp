#include "npspec/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace npspec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fnv_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string canonical(const PeriodicProfile& p) {
  std::ostringstream os;
  os.precision(17);
  os << "alpha=" << p.alpha();
  for (const auto& t : p.terms()) os << ";" << t.k << ":" << t.a << ":" << t.b;
  for (const auto& n : p.tabulated())
    os << ";norms@" << n.c << ":" << n.norm_g << ":" << n.norm_g1 << ":" << n.norm_g2
       << ":" << n.im_g << ":" << n.im_g1;
  return os.str();
}

}  // namespace

PeriodicProfile::PeriodicProfile(double alpha, std::vector<FourierTerm> terms,
                                 ClosedForm closed_form, std::vector<NormTable> tabulated)
    : alpha_(alpha),
      log_alpha_(std::log(alpha)),
      terms_(std::move(terms)),
      closed_form_(closed_form),
      tabulated_(std::move(tabulated)) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
  std::sort(terms_.begin(), terms_.end(),
            [](const FourierTerm& l, const FourierTerm& r) { return l.k < r.k; });
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (t.k < 0) throw std::invalid_argument("Fourier index must be nonnegative");
    if (i > 0 && terms_[i - 1].k == t.k) throw std::invalid_argument("duplicate Fourier index");
    if (!std::isfinite(t.a) || !std::isfinite(t.b))
      throw std::invalid_argument("Fourier coefficients must be finite");
  }
  for (const auto& n : tabulated_) {
    if (!(n.c >= 0.0) || n.norm_g < 0 || n.norm_g1 < 0 || n.norm_g2 < 0 || n.im_g < 0 ||
        n.im_g1 < 0)
      throw std::invalid_argument("norm table entries must be nonnegative");
  }
}

PeriodicProfile PeriodicProfile::sine_squared(double alpha) {
  return PeriodicProfile(alpha, {{0, 0.5, 0.0}, {1, -0.5, 0.0}}, ClosedForm::SineSquared);
}

PeriodicProfile PeriodicProfile::constant(double alpha, double mu) {
  return PeriodicProfile(alpha, {{0, mu, 0.0}}, ClosedForm::Constant);
}

PeriodicProfile PeriodicProfile::flat(double alpha) {
  return PeriodicProfile(alpha, {}, ClosedForm::Constant);
}

bool PeriodicProfile::is_zero() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const FourierTerm& t) {
    return t.a == 0.0 && (t.b == 0.0 || t.k == 0);
  });
}

double PeriodicProfile::g(double x) const {
  double s = 0.0;
  for (const auto& t : terms_) {
    if (t.k == 0) {
      s += t.a;
    } else {
      const double w = kTwoPi * t.k * x;
      s += t.a * std::cos(w) + t.b * std::sin(w);
    }
  }
  return s;
}

double PeriodicProfile::g1(double x) const {
  double s = 0.0;
  for (const auto& t : terms_) {
    if (t.k == 0) continue;
    const double om = kTwoPi * t.k;
    const double w = om * x;
    s += om * (-t.a * std::sin(w) + t.b * std::cos(w));
  }
  return s;
}

double PeriodicProfile::g2(double x) const {
  double s = 0.0;
  for (const auto& t : terms_) {
    if (t.k == 0) continue;
    const double om = kTwoPi * t.k;
    const double w = om * x;
    s -= om * om * (t.a * std::cos(w) + t.b * std::sin(w));
  }
  return s;
}

double PeriodicProfile::f(double x) const {
  if (!(x > 0.0)) throw std::domain_error("f is evaluated on (0, inf) only");
  return x * g(std::log(x) / log_alpha_);
}

double PeriodicProfile::f1_at_exponent(double u) const {
  return g(u) + g1(u) / log_alpha_;
}

double PeriodicProfile::f2_at_exponent(double u) const {
  return (g1(u) / log_alpha_ + g2(u) / (log_alpha_ * log_alpha_)) * std::pow(alpha_, -u);
}

double PeriodicProfile::f1(double x) const {
  if (!(x > 0.0)) throw std::domain_error("f' is evaluated on (0, inf) only");
  return f1_at_exponent(std::log(x) / log_alpha_);
}

double PeriodicProfile::f2(double x) const {
  if (!(x > 0.0)) throw std::domain_error("f'' is evaluated on (0, inf) only");
  const double u = std::log(x) / log_alpha_;
  return (g1(u) / log_alpha_ + g2(u) / (log_alpha_ * log_alpha_)) / x;
}

NormTable PeriodicProfile::fourier_bound(double c) const {
  NormTable n;
  n.c = c;
  for (const auto& t : terms_) {
    if (t.k == 0) {
      n.norm_g += std::abs(t.a);
      continue;
    }
    const double om = kTwoPi * t.k;
    const double amp = std::abs(t.a) + std::abs(t.b);
    const double ch = std::cosh(om * c);
    const double sh = std::sinh(om * c);
    n.norm_g += amp * ch;
    n.norm_g1 += om * amp * ch;
    n.norm_g2 += om * om * amp * ch;
    n.im_g += amp * sh;
    n.im_g1 += om * amp * sh;
  }
  return n;
}

std::optional<NormTable> PeriodicProfile::exact_norms(double c) const {
  if (closed_form_ == ClosedForm::SineSquared) {
    const double pi = std::numbers::pi;
    const double ch = std::cosh(kTwoPi * c);
    const double sh = std::sinh(kTwoPi * c);
    const double chp = std::cosh(pi * c);
    return NormTable{c, chp * chp, kTwoPi * ch / 2.0, kTwoPi * kTwoPi * ch / 2.0, sh / 2.0,
                     kTwoPi * sh / 2.0};
  }
  if (closed_form_ == ClosedForm::Constant) {
    const double mu = terms_.empty() ? 0.0 : terms_.front().a;
    return NormTable{c, std::abs(mu), 0.0, 0.0, 0.0, 0.0};
  }
  for (const auto& n : tabulated_)
    if (n.c == c) return n;
  return std::nullopt;
}

NormPath PeriodicProfile::norm_path(double c) const {
  return exact_norms(c) ? NormPath::Exact : NormPath::FourierBound;
}

NormTable PeriodicProfile::strip_norms(double c) const {
  if (!(c >= 0.0)) throw std::invalid_argument("strip width must be nonnegative");
  if (auto n = exact_norms(c)) return *n;
  return fourier_bound(c);
}

std::string PeriodicProfile::digest() const { return fnv_hex(canonical(*this)); }

DilationGraph DilationGraph::one_sided(PeriodicProfile p) {
  return DilationGraph{Side::OneSided, std::move(p), std::nullopt};
}

DilationGraph DilationGraph::two_sided(PeriodicProfile plus, PeriodicProfile minus) {
  if (plus.alpha() != minus.alpha())
    throw std::invalid_argument("two-sided profiles must share alpha");
  return DilationGraph{Side::TwoSided, std::move(plus), std::move(minus)};
}

bool DilationGraph::is_flat() const {
  return plus.is_zero() && (!minus || minus->is_zero());
}

std::string DilationGraph::digest() const {
  std::string s = two_sided_graph() ? "two|" : "one|";
  s += canonical(plus);
  if (minus) s += "|" + canonical(*minus);
  return fnv_hex(s);
}

Aggregates aggregate_norms(const PeriodicProfile& g, double c) {
  const double la = std::abs(g.log_alpha());
  const NormTable n0 = g.strip_norms(0.0);
  const NormTable nc = g.strip_norms(c);
  Aggregates a;
  a.F0 = n0.norm_g + n0.norm_g1 / la;
  a.Fc = nc.norm_g + nc.norm_g1 / la;
  a.G0 = n0.norm_g1 + n0.norm_g2 / la;
  a.Gc = nc.norm_g1 + nc.norm_g2 / la;
  a.Ic = nc.im_g + nc.im_g1 / la;
  a.im_g_c = nc.im_g;
  a.norm_g_0 = n0.norm_g;
  a.norm_g_c = nc.norm_g;
  return a;
}

PairAggregates aggregate_norms(const DilationGraph& graph, double c) {
  if (!graph.two_sided_graph()) throw std::invalid_argument("pair aggregates need a two-sided graph");
  PairAggregates out;
  out.side[0] = aggregate_norms(graph.plus, c);
  out.side[1] = aggregate_norms(*graph.minus, c);
  const double alpha = graph.alpha();
  const double scale = std::abs(std::log(alpha)) / alpha;
  for (int s = 0; s < 2; ++s)
    out.Kc[s] = scale * std::max(out.side[s].norm_g_c, out.side[1 - s].norm_g_0);
  out.K0 = scale * std::max(out.side[0].norm_g_0, out.side[1].norm_g_0);
  return out;
}

StripCheck validate_strip(const DilationGraph& graph, double c) {
  StripCheck check;
  const double alpha = graph.alpha();
  const double la = std::abs(std::log(alpha));
  const double cmax = std::acos(alpha) / la;
  if (!(c <= cmax)) check.violations.push_back({"c <= arccos(alpha)/|log alpha|", c, cmax});

  auto check_profile = [&](const PeriodicProfile& p, const char* label) {
    const Aggregates a = aggregate_norms(p, c);
    if (!(a.Ic < 1.0))
      check.violations.push_back({std::string("I_c < 1 (") + label + ")", a.Ic, 1.0});
  };
  check_profile(graph.plus, "plus");
  if (!graph.two_sided_graph()) return check;
  check_profile(*graph.minus, "minus");

  const PairAggregates pa = aggregate_norms(graph, c);
  const char* names[2] = {"plus", "minus"};
  for (int s = 0; s < 2; ++s) {
    const double lhs = pa.side[s].im_g_c + alpha * c * pa.Kc[s];
    if (!(lhs < alpha * alpha))
      check.violations.push_back(
          {std::string("|Im g|_c + alpha c K_c < alpha^2 (") + names[s] + ")", lhs,
           alpha * alpha});
  }
  return check;
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::string clean = line.substr(0, line.find('#'));
  std::replace(clean.begin(), clean.end(), '=', ' ');
  std::istringstream is(clean);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

double to_double(const std::string& s, int line_no) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || !std::isfinite(v))
    throw std::runtime_error("line " + std::to_string(line_no) + ": bad number '" + s + "'");
  return v;
}

int side_index(const std::vector<std::string>& tk, std::size_t at, int line_no) {
  if (tk.size() <= at) return 0;
  if (tk[at] == "plus") return 0;
  if (tk[at] == "minus") return 1;
  throw std::runtime_error("line " + std::to_string(line_no) + ": expected plus or minus");
}

}  // namespace

DilationGraph parse_profile(const std::string& text) {
  std::istringstream in(text);
  std::optional<double> alpha;
  std::optional<bool> two_sided;
  std::vector<FourierTerm> terms[2];
  std::vector<NormTable> norms[2];
  bool seen[2] = {false, false};

  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto tk = tokens(line);
    if (tk.empty()) continue;
    const std::string& key = tk[0];
    if (key == "alpha") {
      if (tk.size() != 2) fail("alpha takes one value");
      alpha = to_double(tk[1], line_no);
    } else if (key == "side") {
      if (tk.size() != 2 || (tk[1] != "one" && tk[1] != "two")) fail("side must be one or two");
      two_sided = tk[1] == "two";
    } else if (key == "fourier") {
      const int s = side_index(tk, 1, line_no);
      seen[s] = true;
      bool closed = false;
      while (std::getline(in, line)) {
        ++line_no;
        auto row = tokens(line);
        if (row.empty()) continue;
        if (row[0] == "end") {
          closed = true;
          break;
        }
        if (row.size() != 3) fail("expected 'k a_k b_k'");
        const double kd = to_double(row[0], line_no);
        if (kd != std::floor(kd) || kd < 0) fail("Fourier index must be a nonnegative integer");
        terms[s].push_back({static_cast<int>(kd), to_double(row[1], line_no),
                            to_double(row[2], line_no)});
      }
      if (!closed) fail("unterminated fourier block");
    } else if (key == "norms") {
      if (tk.size() < 2) fail("norms needs a strip width");
      const int s = tk.size() >= 3 ? side_index(tk, 1, line_no) : 0;
      NormTable n;
      n.c = to_double(tk.back(), line_no);
      bool closed = false;
      while (std::getline(in, line)) {
        ++line_no;
        auto row = tokens(line);
        if (row.empty()) continue;
        if (row[0] == "end") {
          closed = true;
          break;
        }
        if (row.size() != 2) fail("expected 'name value'");
        const double v = to_double(row[1], line_no);
        if (row[0] == "norm_g") n.norm_g = v;
        else if (row[0] == "norm_g1") n.norm_g1 = v;
        else if (row[0] == "norm_g2") n.norm_g2 = v;
        else if (row[0] == "im_g") n.im_g = v;
        else if (row[0] == "im_g1") n.im_g1 = v;
        else fail("unknown norm '" + row[0] + "'");
      }
      if (!closed) fail("unterminated norms block");
      norms[s].push_back(n);
    } else {
      fail("unknown key '" + key + "'");
    }
  }

  if (!alpha) throw std::runtime_error("profile file lacks alpha");
  if (!seen[0]) throw std::runtime_error("profile file lacks a fourier block");
  const bool two = two_sided.value_or(seen[1]);
  if (two && !seen[1]) throw std::runtime_error("two-sided profile lacks a minus fourier block");
  if (!two && seen[1]) throw std::runtime_error("minus profile given for a one-sided graph");

  PeriodicProfile plus(*alpha, terms[0], ClosedForm::None, norms[0]);
  if (!two) return DilationGraph::one_sided(std::move(plus));
  return DilationGraph::two_sided(std::move(plus),
                                  PeriodicProfile(*alpha, terms[1], ClosedForm::None, norms[1]));
}

DilationGraph load_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_profile(ss.str());
}

}  // namespace npspec
