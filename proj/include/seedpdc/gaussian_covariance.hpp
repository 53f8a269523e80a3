#pragma once

#include <array>

#include <Eigen/Dense>

#include "seedpdc/seed_model.hpp"

namespace seedpdc {

/// Quadrature covariance over (X_A, Y_A, X_B, Y_B) with X = (a + a^dagger)/sqrt2,
/// Y = (a - a^dagger)/(i sqrt2); vacuum is I/2.
class CovarianceMatrix4 {
 public:
  CovarianceMatrix4() : v_(Eigen::Matrix4d::Identity() * 0.5) {}
  /// Throws NumericalError if non-finite or not symmetric within 1e-12.
  explicit CovarianceMatrix4(const Eigen::Matrix4d& v);

  const Eigen::Matrix4d& matrix() const noexcept { return v_; }
  double operator()(int r, int c) const { return v_(r, c); }

  /// Smallest eigenvalue of the Hermitian matrix V + (i/2) Omega.
  double uncertainty_margin() const;
  bool is_physical(double tol = 1e-10) const { return uncertainty_margin() >= -tol; }

 private:
  Eigen::Matrix4d v_;
};

const Eigen::Matrix4d& symplectic_form();

CovarianceMatrix4 build_covariance(const SeededPdcConfig& cfg);

/// Y_B -> -Y_B conjugation. An involution.
CovarianceMatrix4 partial_transpose_cov(const CovarianceMatrix4& v);

/// Both symplectic eigenvalues (ascending) as |eig(i Omega V)|.
std::array<double, 2> symplectic_eigenvalues(const CovarianceMatrix4& v);
double smallest_symplectic_eigenvalue(const CovarianceMatrix4& v);

/// Closed form for the standard form diag blocks A I, B I and correlations
/// C I (already partially transposed).
double d_minus_standard_form(double a, double b, double c);

/// d_minus must fall this far below 1/2 to count as entangled. Round-off in
/// the covariance puts product states at 1/2 - O(1e-16).
inline constexpr double kEntanglementGuard = 1e-12;

struct EntanglementDecision {
  bool entangled = false;
  double d_minus = 0.0;
};

EntanglementDecision is_entangled_gaussian(const SeededPdcConfig& cfg);

/// Entries of the squeezed-seed partially transposed covariance as commonly
/// quoted (two G lines, both labelled G1; the second is taken as G2).
/// Reported next to oracle values so the disagreement is visible; never used
/// for decisions.
struct QuotedSqueezedEntries {
  double a1, a2, b1, b2, d, f, c1, c2, g1, g2;
};
QuotedSqueezedEntries quoted_squeezed_entries(double ns_a, double ns_b, double n_gain,
                                              double delta_phi);
/// The quoted entries assembled into the block layout they are printed in.
Eigen::Matrix4d quoted_squeezed_pt_matrix(double ns_a, double ns_b, double n_gain,
                                          double delta_phi);

}  // namespace seedpdc
