#pragma once

#include <optional>

#include "seedpdc/seed_model.hpp"

namespace seedpdc {

struct QuantifierFlags {
  bool is_ssn = false;
  bool is_lee_nonclassical = false;
  bool is_entangled = false;
};

struct QuantifierReport {
  MomentSet moments;
  double p_ssn = 0.0;
  double p_lee = 0.0;
  std::optional<double> p_ent;  ///< thermal and vacuum seeds only
  double d_minus = 0.0;
  QuantifierFlags flags;
};

/// A threshold in N. `always` marks the zero threshold: the criterion holds
/// for every N > 0.
struct ThresholdValue {
  double value = 0.0;
  bool always = false;
};

struct ThresholdReport {
  ThresholdValue n_ssn;
  ThresholdValue n_lee;
  std::optional<ThresholdValue> n_ent;  ///< thermal and vacuum seeds only
};

/// 1 - Var(n_A - n_B) / (<n_A> + <n_B>). Throws UndefinedQuantifier when both
/// beams are empty.
double p_ssn(const MomentSet& m);
/// 1 - [Var(n_A - n_B) + (<n_A> - <n_B>)^2] / (<n_A> + <n_B>).
double p_lee(const MomentSet& m);
/// 1 - [Var(n_A - n_B) - (<n_A> - <n_B>)^2] / (<n_A> + <n_B>). Throws
/// NotApplicable unless `family` is Thermal or Vacuum.
double p_ent(const MomentSet& m, SeedFamily family);

ThresholdValue ssn_threshold(const SeededPdcConfig& cfg);
ThresholdValue lee_threshold(const SeededPdcConfig& cfg);
double ent_threshold_thermal(double mu_a, double mu_b);
ThresholdReport thresholds(const SeededPdcConfig& cfg);

QuantifierReport classify(const SeededPdcConfig& cfg);

namespace coherent {

/// Numerator of the coherent-seed Lee parameter as a function of N.
double lee_numerator(double n_gain, double m_a, double m_b, double phase_r);

struct LeeRoots {
  double minus = 0.0;
  double plus = 0.0;
  bool degenerate = false;
};

/// Closed-form roots N_-/N_+ of the Lee numerator (after squaring).
LeeRoots lee_roots(double m_a, double m_b, double phase_r);

/// Bisection on lee_numerator over [lo, hi]; requires a sign change.
double bisect_lee_root(double m_a, double m_b, double phase_r, double lo, double hi,
                       double tol = 1e-10);

}  // namespace coherent

/// Per-family closed forms of the three parameters, written out explicitly.
/// Used to cross-check the generic moment-based path.
namespace closed_form {

double thermal_p_ssn(double mu_a, double mu_b, double n_gain);
double thermal_p_lee(double mu_a, double mu_b, double n_gain);
double thermal_p_ent(double mu_a, double mu_b, double n_gain);
double coherent_p_ssn(double m_a, double m_b, double n_gain, double phase_r);
double coherent_p_lee(double m_a, double m_b, double n_gain, double phase_r);
double squeezed_p_ssn(double ns_a, double ns_b, double n_gain);
double squeezed_p_lee(double ns_a, double ns_b, double n_gain);

/// The squeezed-seed P_SSN with the commonly quoted numerator
/// 2N(1+N_A+N_B) - 2N_A(1+N_A) - 2N_B(1+N_B). Inconsistent with the variance
/// identity; kept only so tests can show where it goes wrong.
double squeezed_p_ssn_quoted(double ns_a, double ns_b, double n_gain);

}  // namespace closed_form

}  // namespace seedpdc
