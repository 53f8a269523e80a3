#include "seedpdc/quantifiers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seedpdc/errors.hpp"
#include "seedpdc/gaussian_covariance.hpp"
#include "seedpdc/simd/kernels.hpp"

namespace seedpdc {
namespace {

struct PTriple {
  double ssn, lee, ent;
};

PTriple p_triple(const MomentSet& m) {
  if (!(m.mean_a + m.mean_b > 0.0))
    throw UndefinedQuantifier("quantifier undefined: both beams are empty (<n_A> + <n_B> = 0)");
  PTriple p{};
  simd::p_parameters_one(m.mean_a, m.mean_b, m.var_diff, p.ssn, p.lee, p.ent);
  return p;
}

bool has_p_ent(SeedFamily family) {
  return family == SeedFamily::Thermal || family == SeedFamily::Vacuum;
}

ThresholdValue make_threshold(double v) {
  if (v < 0.0) v = 0.0;
  return {v, v == 0.0};
}

}  // namespace

double p_ssn(const MomentSet& m) { return p_triple(m).ssn; }
double p_lee(const MomentSet& m) { return p_triple(m).lee; }

double p_ent(const MomentSet& m, SeedFamily family) {
  if (!has_p_ent(family))
    throw NotApplicable("P_Ent is defined only for thermal seeds, not " +
                        std::string(to_string(family)));
  return p_triple(m).ent;
}

double ent_threshold_thermal(double mu_a, double mu_b) {
  return mu_a * mu_b / (1.0 + mu_a + mu_b);
}

ThresholdValue ssn_threshold(const SeededPdcConfig& cfg) {
  const double sa = cfg.intensity_a();
  const double sb = cfg.intensity_b();
  switch (cfg.family()) {
    case SeedFamily::Thermal:
    case SeedFamily::Vacuum:
      return make_threshold((sa * sa + sb * sb) / (2.0 * (1.0 + sa + sb)));
    case SeedFamily::Squeezed:
      return make_threshold((sa * (1.0 + 2.0 * sa) + sb * (1.0 + 2.0 * sb)) /
                            (2.0 * (1.0 + sa + sb)));
    case SeedFamily::Coherent: {
      const double cr = std::cos(cfg.coherent_phase());
      if (cr >= 0.0) return {0.0, true};
      const double h4 = 4.0 * sa * sb * cr * cr;
      const double b = 1.0 + sa + sb;
      return make_threshold(h4 / (b * b - h4));
    }
  }
  throw ConfigError("unknown seed family");
}

ThresholdValue lee_threshold(const SeededPdcConfig& cfg) {
  const double sa = cfg.intensity_a();
  const double sb = cfg.intensity_b();
  switch (cfg.family()) {
    case SeedFamily::Thermal:
    case SeedFamily::Vacuum:
      return make_threshold((sa * sa + sb * sb - sa * sb) / (1.0 + sa + sb));
    case SeedFamily::Squeezed:
      return make_threshold((sa + sb + 3.0 * sa * sa + 3.0 * sb * sb - 2.0 * sa * sb) /
                            (2.0 * (1.0 + sa + sb)));
    case SeedFamily::Coherent: {
      const double r = cfg.coherent_phase();
      const coherent::LeeRoots roots = coherent::lee_roots(sa, sb, r);
      const bool positive_branch = std::cos(r) >= 0.0;
      if (!roots.degenerate) return make_threshold(positive_branch ? roots.minus : roots.plus);
      // Bracket the sign change of the numerator and bisect.
      const double b = 1.0 + sa + sb;
      const double a = (sa - sb) * (sa - sb);
      double lo = positive_branch ? 0.0 : a / (2.0 * b);
      double hi = positive_branch ? a / (2.0 * b) : std::max(1.0, 2.0 * lo);
      while (coherent::lee_numerator(hi, sa, sb, r) <= 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) throw NumericalError("Lee threshold bracket not found");
      }
      if (coherent::lee_numerator(lo, sa, sb, r) > 0.0) return make_threshold(lo);
      return make_threshold(coherent::bisect_lee_root(sa, sb, r, lo, hi));
    }
  }
  throw ConfigError("unknown seed family");
}

ThresholdReport thresholds(const SeededPdcConfig& cfg) {
  ThresholdReport t;
  t.n_ssn = ssn_threshold(cfg);
  t.n_lee = lee_threshold(cfg);
  if (has_p_ent(cfg.family()))
    t.n_ent = make_threshold(ent_threshold_thermal(cfg.intensity_a(), cfg.intensity_b()));
  return t;
}

QuantifierReport classify(const SeededPdcConfig& cfg) {
  QuantifierReport r;
  r.moments = output_moments(cfg);
  const PTriple p = p_triple(r.moments);
  r.p_ssn = p.ssn;
  r.p_lee = p.lee;
  if (has_p_ent(cfg.family())) r.p_ent = p.ent;
  const EntanglementDecision ent = is_entangled_gaussian(cfg);
  r.d_minus = ent.d_minus;
  r.flags.is_ssn = r.p_ssn > 0.0;
  r.flags.is_lee_nonclassical = r.p_lee > 0.0;
  r.flags.is_entangled = ent.entangled;
  return r;
}

namespace coherent {

double lee_numerator(double n_gain, double m_a, double m_b, double phase_r) {
  const double b = 1.0 + m_a + m_b;
  const double a = (m_a - m_b) * (m_a - m_b);
  return 2.0 * n_gain * b +
         4.0 * std::sqrt(n_gain * (n_gain + 1.0)) * std::sqrt(m_a * m_b) * std::cos(phase_r) - a;
}

LeeRoots lee_roots(double m_a, double m_b, double phase_r) {
  const double cr = std::cos(phase_r);
  const double h = m_a * m_b * cr * cr;
  const double a = (m_a - m_b) * (m_a - m_b);
  const double b = 1.0 + m_a + m_b;
  const double denom = 2.0 * (b * b - 4.0 * h);
  LeeRoots roots;
  if (std::abs(denom) <= 1e-12 * b * b) {
    roots.degenerate = true;
    return roots;
  }
  const double center = 4.0 * h + a * b;
  const double spread = 2.0 * std::sqrt(h * (4.0 * h + 2.0 * a * b + a * a));
  roots.minus = (center - spread) / denom;
  roots.plus = (center + spread) / denom;
  return roots;
}

double bisect_lee_root(double m_a, double m_b, double phase_r, double lo, double hi, double tol) {
  double flo = lee_numerator(lo, m_a, m_b, phase_r);
  const double fhi = lee_numerator(hi, m_a, m_b, phase_r);
  if ((flo > 0.0) == (fhi > 0.0)) throw NumericalError("bisection interval has no sign change");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = lee_numerator(mid, m_a, m_b, phase_r);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace coherent

namespace closed_form {

double thermal_p_ssn(double mu_a, double mu_b, double n) {
  const double g = 2.0 * n * (1.0 + mu_a + mu_b);
  return (g - mu_a * mu_a - mu_b * mu_b) / (g + mu_a + mu_b);
}

double thermal_p_lee(double mu_a, double mu_b, double n) {
  const double k = n * (1.0 + mu_a + mu_b);
  return 2.0 * (k - mu_a * mu_a - mu_b * mu_b + mu_a * mu_b) / (2.0 * k + mu_a + mu_b);
}

double thermal_p_ent(double mu_a, double mu_b, double n) {
  const double k = n * (1.0 + mu_a + mu_b);
  return 2.0 * (k - mu_a * mu_b) / (2.0 * k + mu_a + mu_b);
}

double coherent_p_ssn(double m_a, double m_b, double n, double r) {
  const double num =
      2.0 * n * (1.0 + m_a + m_b) + 4.0 * std::sqrt(n * (n + 1.0)) * std::sqrt(m_a * m_b) * std::cos(r);
  return num / (num + m_a + m_b);
}

double coherent_p_lee(double m_a, double m_b, double n, double r) {
  const double common =
      2.0 * n * (1.0 + m_a + m_b) + 4.0 * std::sqrt(n * (n + 1.0)) * std::sqrt(m_a * m_b) * std::cos(r);
  return (common - (m_a - m_b) * (m_a - m_b)) / (common + m_a + m_b);
}

double squeezed_p_ssn(double na, double nb, double n) {
  const double g = 2.0 * n * (1.0 + na + nb);
  return (g - na * (1.0 + 2.0 * na) - nb * (1.0 + 2.0 * nb)) / (g + na + nb);
}

double squeezed_p_lee(double na, double nb, double n) {
  const double g = 2.0 * n * (1.0 + na + nb);
  return (g - 2.0 * (na * na + nb * nb) - (na - nb) * (na - nb) - na - nb) / (g + na + nb);
}

double squeezed_p_ssn_quoted(double na, double nb, double n) {
  const double g = 2.0 * n * (1.0 + na + nb);
  return (g - 2.0 * na * (1.0 + na) - 2.0 * nb * (1.0 + nb)) / (g + na + nb);
}

}  // namespace closed_form

}  // namespace seedpdc
