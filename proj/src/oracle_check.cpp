#include "seedpdc/oracle_check.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <variant>

#include "seedpdc/errors.hpp"
#include "seedpdc/quantifiers.hpp"

namespace seedpdc::oracle {
namespace {

void add_row(VerifyReport& report, std::string quantity, double closed_form, double oracle,
             double tolerance, bool ledger_only = false) {
  ComparisonRow row;
  row.quantity = std::move(quantity);
  row.closed_form = closed_form;
  row.oracle = oracle;
  row.abs_diff = std::abs(closed_form - oracle);
  row.tolerance = tolerance;
  row.pass = row.abs_diff <= tolerance;
  row.ledger_only = ledger_only;
  report.rows.push_back(std::move(row));
}

const char* const kAxis[4] = {"X_A", "Y_A", "X_B", "Y_B"};

std::string entry_name(const char* prefix, int r, int c) {
  return std::string(prefix) + "(" + kAxis[r] + "," + kAxis[c] + ")";
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ComparisonRow& r) { return r.pass || r.ledger_only; });
}

PhaseCalibration calibrate_coherent_phase(double m_a, double m_b, double n_gain,
                                          const OracleConfig& oc, int samples) {
  if (samples < 3) throw ConfigError("phase calibration needs at least 3 samples");
  if (!(m_a > 0.0 && m_b > 0.0 && n_gain > 0.0))
    throw ConfigError("phase calibration needs two nonempty coherent seeds and N > 0");
  OracleConfig raw = oc;
  raw.coherent_phase_offset = 0.0;
  // On a uniform grid over a full period the least-squares coefficients of
  // cos r and sin r reduce to discrete Fourier sums.
  double c1 = 0.0, s1 = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double r = 2.0 * std::numbers::pi * k / samples;
    const MomentSet m =
        measure_moments(simulate(SeededPdcConfig::coherent(m_a, m_b, n_gain, r), raw));
    c1 += m.mean_a * std::cos(r);
    s1 += m.mean_a * std::sin(r);
  }
  c1 *= 2.0 / samples;
  s1 *= 2.0 / samples;
  PhaseCalibration cal;
  cal.offset = std::atan2(s1, c1);
  cal.amplitude = std::hypot(c1, s1);
  cal.samples = samples;
  return cal;
}

VerifyReport verify_point(const SeededPdcConfig& cfg, const OracleConfig& oc,
                          const VerifyOptions& opts) {
  oc.validate();
  VerifyReport report;
  OracleConfig used = oc;
  if (cfg.family() == SeedFamily::Coherent && opts.calibrate && cfg.intensity_a() > 0.0 &&
      cfg.intensity_b() > 0.0 && cfg.pdc().n_gain > 0.0) {
    report.calibration = calibrate_coherent_phase(cfg.intensity_a(), cfg.intensity_b(),
                                                  cfg.pdc().n_gain, oc);
    used.coherent_phase_offset = report.calibration->offset;
  }

  const FockStateTwoMode state = simulate(cfg, used);
  report.tail_mass = state.tail_mass();
  report.unitarity_residual = state.unitarity_residual();
  const double tol = std::max(opts.tolerance, 10.0 * report.tail_mass);

  const MomentSet cf = output_moments(cfg);
  const MomentSet om = measure_moments(state);
  add_row(report, "mean_a", cf.mean_a, om.mean_a, tol);
  add_row(report, "mean_b", cf.mean_b, om.mean_b, tol);
  add_row(report, "var_diff", cf.var_diff, om.var_diff, tol);
  add_row(report, "cross", cf.cross, om.cross, tol);
  add_row(report, "fac2_a", cf.fac2_a, om.fac2_a, tol);
  add_row(report, "fac2_b", cf.fac2_b, om.fac2_b, tol);
  add_row(report, "input_variance_sum", input_variance(cfg.seed_a()) + input_variance(cfg.seed_b()),
          om.var_diff, tol);

  if (cf.mean_a + cf.mean_b > 0.0 && om.mean_a + om.mean_b > 0.0) {
    add_row(report, "p_ssn", p_ssn(cf), p_ssn(om), tol);
    add_row(report, "p_lee", p_lee(cf), p_lee(om), tol);
    if (cfg.family() == SeedFamily::Thermal || cfg.family() == SeedFamily::Vacuum)
      add_row(report, "p_ent", p_ent(cf, cfg.family()), p_ent(om, cfg.family()), tol);
  }

  if (opts.covariance) {
    const CovarianceMatrix4 vc = build_covariance(cfg);
    const CovarianceMatrix4 vo = measure_covariance(state);
    for (int r = 0; r < 4; ++r)
      for (int c = r; c < 4; ++c) add_row(report, entry_name("V", r, c), vc(r, c), vo(r, c), tol);
    const double dc = smallest_symplectic_eigenvalue(partial_transpose_cov(vc));
    const double dor = smallest_symplectic_eigenvalue(partial_transpose_cov(vo));
    add_row(report, "d_minus", dc, dor, tol);

    if (cfg.family() == SeedFamily::Squeezed) {
      double zeta_a = 0.0, zeta_b = 0.0;
      if (const auto* s = std::get_if<SqueezedVacuum>(&cfg.seed_a())) zeta_a = s->zeta;
      if (const auto* s = std::get_if<SqueezedVacuum>(&cfg.seed_b())) zeta_b = s->zeta;
      const double dphi = 0.5 * zeta_a + 0.5 * zeta_b - cfg.pdc().phi;
      const Eigen::Matrix4d quoted = quoted_squeezed_pt_matrix(cfg.intensity_a(), cfg.intensity_b(),
                                                               cfg.pdc().n_gain, dphi);
      const Eigen::Matrix4d measured = partial_transpose_cov(vo).matrix();
      for (int r = 0; r < 4; ++r)
        for (int c = r; c < 4; ++c)
          add_row(report, entry_name("quoted_Vpt", r, c), quoted(r, c), measured(r, c), tol, true);
    }
  }

  if (state.dim() <= opts.max_pt_dim) {
    const double lowest = pt_negativity(state);
    const bool oracle_entangled = lowest < -1e-8;
    const bool gaussian_entangled = is_entangled_gaussian(cfg).entangled;
    add_row(report, "pt_entangled", gaussian_entangled ? 1.0 : 0.0, oracle_entangled ? 1.0 : 0.0,
            0.0);
  }
  return report;
}

}  // namespace seedpdc::oracle
