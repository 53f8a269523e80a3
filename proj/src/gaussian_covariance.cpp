#include "seedpdc/gaussian_covariance.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "seedpdc/errors.hpp"
#include "seedpdc/gaussian_moments.hpp"

namespace seedpdc {
namespace {

CovarianceMatrix4 covariance_from_moments(const ModeMoments& mm) {
  // Symmetrized second moments of (da_A, da_B, da_A^dagger, da_B^dagger).
  Eigen::Matrix4cd s;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      const double delta = j == k ? 0.5 : 0.0;
      s(j, k) = mm.m[j][k];
      s(j, 2 + k) = mm.n[k][j] + delta;
      s(2 + j, k) = mm.n[j][k] + delta;
      s(2 + j, 2 + k) = std::conj(mm.m[j][k]);
    }
  }
  const double r = 1.0 / std::sqrt(2.0);
  const cplx i(0.0, 1.0);
  Eigen::Matrix4cd t = Eigen::Matrix4cd::Zero();
  for (int j = 0; j < 2; ++j) {
    t(2 * j, j) = r;
    t(2 * j, 2 + j) = r;
    t(2 * j + 1, j) = -i * r;
    t(2 * j + 1, 2 + j) = i * r;
  }
  Eigen::Matrix4d v = (t * s * t.transpose()).real();
  return CovarianceMatrix4(0.5 * (v + v.transpose()));
}

}  // namespace

CovarianceMatrix4::CovarianceMatrix4(const Eigen::Matrix4d& v) : v_(v) {
  if (!v_.allFinite()) throw NumericalError("covariance matrix has non-finite entries");
  if ((v_ - v_.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw NumericalError("covariance matrix is not symmetric");
}

double CovarianceMatrix4::uncertainty_margin() const {
  const Eigen::Matrix4cd h = v_.cast<cplx>() + cplx(0.0, 0.5) * symplectic_form().cast<cplx>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

const Eigen::Matrix4d& symplectic_form() {
  static const Eigen::Matrix4d omega = [] {
    Eigen::Matrix4d o = Eigen::Matrix4d::Zero();
    o(0, 1) = 1.0;
    o(1, 0) = -1.0;
    o(2, 3) = 1.0;
    o(3, 2) = -1.0;
    return o;
  }();
  return omega;
}

CovarianceMatrix4 build_covariance(const SeededPdcConfig& cfg) {
  return covariance_from_moments(output_mode_moments(cfg));
}

CovarianceMatrix4 partial_transpose_cov(const CovarianceMatrix4& v) {
  const Eigen::Vector4d lambda(1.0, 1.0, 1.0, -1.0);
  return CovarianceMatrix4(lambda.asDiagonal() * v.matrix() * lambda.asDiagonal());
}

std::array<double, 2> symplectic_eigenvalues(const CovarianceMatrix4& v) {
  const Eigen::Matrix4cd m = cplx(0.0, 1.0) * (symplectic_form() * v.matrix()).cast<cplx>();
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(m, false);
  if (es.info() != Eigen::Success) throw NumericalError("symplectic eigenvalue solve failed");
  std::array<double, 4> mags{};
  for (int k = 0; k < 4; ++k) mags[k] = std::abs(es.eigenvalues()(k));
  std::sort(mags.begin(), mags.end());
  return {0.5 * (mags[0] + mags[1]), 0.5 * (mags[2] + mags[3])};
}

double smallest_symplectic_eigenvalue(const CovarianceMatrix4& v) {
  return symplectic_eigenvalues(v)[0];
}

double d_minus_standard_form(double a, double b, double c) {
  const double s = a * a + b * b + 2.0 * c * c;
  const double root = std::sqrt((a + b) * (a + b) * ((a - b) * (a - b) + 4.0 * c * c));
  return std::sqrt(std::max(0.0, s - root)) / std::sqrt(2.0);
}

EntanglementDecision is_entangled_gaussian(const SeededPdcConfig& cfg) {
  const double d = smallest_symplectic_eigenvalue(partial_transpose_cov(build_covariance(cfg)));
  return {d < 0.5 - kEntanglementGuard, d};
}

QuotedSqueezedEntries quoted_squeezed_entries(double na, double nb, double n, double dphi) {
  const double sa = std::sqrt(na * (1.0 + na));
  const double sb = std::sqrt(nb * (1.0 + nb));
  const double base = 0.5 + n * (2.0 + na + nb);
  const double c2p = std::cos(2.0 * dphi);
  const double s2p = std::sin(2.0 * dphi);
  const double corr = std::sqrt(n * (1.0 + n)) * std::cos(dphi);
  QuotedSqueezedEntries e{};
  e.a1 = base + sa * (1.0 + n) + sb * n * c2p;
  e.a2 = base - sa * (1.0 + n) - sb * n * c2p;
  e.b1 = base + sb * (1.0 + n) + sa * n * c2p;
  e.b2 = base - sb * (1.0 + n) - sa * n * c2p;
  e.d = sb * n * s2p;
  e.f = sa * n * s2p;
  e.c1 = (1.0 + na + nb + sa + sb) * corr;
  e.c2 = (-1.0 - na - nb + sa + sb) * corr;
  e.g1 = (1.0 + na + nb + sa - sb) * corr;
  e.g2 = (1.0 + na + nb - sa + sb) * corr;
  return e;
}

Eigen::Matrix4d quoted_squeezed_pt_matrix(double na, double nb, double n, double dphi) {
  const QuotedSqueezedEntries e = quoted_squeezed_entries(na, nb, n, dphi);
  Eigen::Matrix4d v;
  v << e.a1, e.d, e.c1, e.g1,  //
      e.d, e.a2, e.g2, e.c2,   //
      e.c1, e.g2, e.b1, e.f,   //
      e.g1, e.c2, e.f, e.b2;
  return v;
}

}  // namespace seedpdc
