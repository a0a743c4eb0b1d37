#pragma once

#include <optional>
#include <string>
#include <vector>

namespace npspec {

// Sup-norm bounds of g and its derivatives on the strip |Im z| < c.
struct NormTable {
  double c = 0.0;
  double norm_g = 0.0;
  double norm_g1 = 0.0;
  double norm_g2 = 0.0;
  double im_g = 0.0;
  double im_g1 = 0.0;
};

enum class NormPath { Exact, FourierBound };

struct FourierTerm {
  int k = 0;
  double a = 0.0;
  double b = 0.0;
};

enum class ClosedForm { None, SineSquared, Constant };

// 1-periodic generator g of a dilation-invariant graph f(x) = x g(log_alpha x).
class PeriodicProfile {
public:
  PeriodicProfile(double alpha, std::vector<FourierTerm> terms,
                  ClosedForm closed_form = ClosedForm::None,
                  std::vector<NormTable> tabulated = {});

  static PeriodicProfile sine_squared(double alpha);
  static PeriodicProfile constant(double alpha, double mu);
  static PeriodicProfile flat(double alpha);

  double alpha() const { return alpha_; }
  double log_alpha() const { return log_alpha_; }
  const std::vector<FourierTerm>& terms() const { return terms_; }
  ClosedForm closed_form() const { return closed_form_; }
  const std::vector<NormTable>& tabulated() const { return tabulated_; }
  bool is_zero() const;

  double g(double x) const;
  double g1(double x) const;
  double g2(double x) const;

  // f, f', f'' on (0, inf); throw std::domain_error for x <= 0.
  double f(double x) const;
  double f1(double x) const;
  double f2(double x) const;

  // f'(alpha^x) and f''(alpha^x) in terms of g at x.
  double f1_at_exponent(double x) const;
  double f2_at_exponent(double x) const;

  NormTable strip_norms(double c) const;
  NormTable fourier_bound(double c) const;
  NormPath norm_path(double c) const;

  std::string digest() const;

private:
  std::optional<NormTable> exact_norms(double c) const;

  double alpha_;
  double log_alpha_;
  std::vector<FourierTerm> terms_;
  ClosedForm closed_form_;
  std::vector<NormTable> tabulated_;
};

enum class Side { OneSided, TwoSided };

struct DilationGraph {
  Side side = Side::OneSided;
  PeriodicProfile plus;
  std::optional<PeriodicProfile> minus;

  static DilationGraph one_sided(PeriodicProfile p);
  static DilationGraph two_sided(PeriodicProfile plus, PeriodicProfile minus);

  double alpha() const { return plus.alpha(); }
  bool two_sided_graph() const { return side == Side::TwoSided; }
  bool is_flat() const;
  std::string digest() const;
};

struct Aggregates {
  double F0 = 0.0;
  double Fc = 0.0;
  double G0 = 0.0;
  double Gc = 0.0;
  double Ic = 0.0;
  double im_g_c = 0.0;
  double norm_g_0 = 0.0;
  double norm_g_c = 0.0;
};

Aggregates aggregate_norms(const PeriodicProfile& g, double c);

// Two-sided aggregates; index 0 is the plus profile, 1 the minus profile.
struct PairAggregates {
  Aggregates side[2];
  double Kc[2] = {0.0, 0.0};
  double K0 = 0.0;
};

PairAggregates aggregate_norms(const DilationGraph& graph, double c);

struct StripViolation {
  std::string condition;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct StripCheck {
  std::vector<StripViolation> violations;
  bool ok() const { return violations.empty(); }
};

StripCheck validate_strip(const DilationGraph& graph, double c);

// Parses the key-value profile format; throws std::runtime_error on malformed input.
DilationGraph parse_profile(const std::string& text);
DilationGraph load_profile_file(const std::string& path);

}  // namespace npspec
