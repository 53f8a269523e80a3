#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seedpdc/fock_oracle.hpp"

namespace seedpdc::oracle {

struct PhaseCalibration {
  double offset = 0.0;    ///< fitted delta, wrapped to (-pi, pi]
  double amplitude = 0.0; ///< fitted interference amplitude of <n_A>(r)
  int samples = 0;
};

/// Scans the combined coherent phase r over [0, 2pi), fits
/// <n_A>(r) = c0 + c1 cos r + s1 sin r by least squares and returns the
/// location of the maximum. The closed form peaks at r = 0, so the result is
/// the offset the oracle needs (gamma_eff = gamma + delta).
PhaseCalibration calibrate_coherent_phase(double m_a, double m_b, double n_gain,
                                          const OracleConfig& oc, int samples = 12);

struct ComparisonRow {
  std::string quantity;
  double closed_form = 0.0;
  double oracle = 0.0;
  double abs_diff = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  /// Reported for the discrepancy record only; never fails a run.
  bool ledger_only = false;
};

struct VerifyReport {
  std::vector<ComparisonRow> rows;
  double tail_mass = 0.0;
  double unitarity_residual = 0.0;
  std::optional<PhaseCalibration> calibration;
  bool ok() const;
};

struct VerifyOptions {
  double tolerance = 1e-6;
  bool covariance = true;
  /// Partial-transpose spectrum is computed only up to this dim.
  int max_pt_dim = 40;
  bool calibrate = true;
};

/// Compares every closed-form quantity for `cfg` with the oracle.
VerifyReport verify_point(const SeededPdcConfig& cfg, const OracleConfig& oc,
                          const VerifyOptions& opts = {});

}  // namespace seedpdc::oracle
