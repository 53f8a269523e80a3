#include <cmath>

#include <doctest.h>

#include "seedpdc/errors.hpp"
#include "seedpdc/gaussian_covariance.hpp"
#include "seedpdc/quantifiers.hpp"

using namespace seedpdc;
using doctest::Approx;

namespace {

double max_abs(const Eigen::Matrix4d& m) { return m.cwiseAbs().maxCoeff(); }

bool p_ent_sign_positive(double a, double b, double n) {
  return p_ent(output_moments(SeededPdcConfig::thermal(a, b, n)), SeedFamily::Thermal) > 0.0;
}

}  // namespace

TEST_SUITE("gaussian_covariance") {
  TEST_CASE("vacuum seeds at N = 1") {
    const auto v = build_covariance(SeededPdcConfig::thermal(0, 0, 1));
    CHECK(v(0, 0) == Approx(1.5));
    CHECK(v(1, 1) == Approx(1.5));
    CHECK(v(2, 2) == Approx(1.5));
    CHECK(std::abs(v(0, 2)) == Approx(std::sqrt(2.0)));
    CHECK(v(1, 3) == Approx(-v(0, 2)));
    CHECK(std::abs(v(0, 1)) < 1e-15);
    CHECK(std::abs(v(0, 3)) < 1e-15);
  }

  TEST_CASE("thermal seeds without interaction") {
    const auto v = build_covariance(SeededPdcConfig::thermal(1, 2, 0));
    Eigen::Matrix4d expect = Eigen::Vector4d(1.5, 1.5, 2.5, 2.5).asDiagonal();
    CHECK(max_abs(v.matrix() - expect) < 1e-14);
  }

  TEST_CASE("single squeezed mode has squeezed and antisqueezed quadratures") {
    const auto v = build_covariance(SeededPdcConfig::squeezed(1, 0, 0));
    const double anti = 0.5 + 1.0 + std::sqrt(2.0);
    const double sq = 0.5 + 1.0 - std::sqrt(2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(v.matrix().topLeftCorner<2, 2>());
    CHECK(es.eigenvalues()(0) == Approx(sq).epsilon(1e-13));
    CHECK(es.eigenvalues()(1) == Approx(anti).epsilon(1e-13));
    CHECK(es.eigenvalues()(0) * es.eigenvalues()(1) == Approx(0.25));
    // The printed entry for the squeezed quadrature is negative here.
    CHECK(quoted_squeezed_entries(1, 0, 0, 0).a2 < 0.0);
  }

  TEST_CASE("covariances are physical") {
    for (double n : {0.0, 0.2, 1.0})
      for (double s : {0.0, 0.5, 2.0}) {
        for (const auto& cfg : {SeededPdcConfig::thermal(s, 0.3, n), SeededPdcConfig::coherent(s, 1.0, n, 0.8),
                                SeededPdcConfig::squeezed(s, 0.7, n, 0.3, 1.1, 0.4)}) {
          const auto v = build_covariance(cfg);
          CHECK(v.is_physical());
          CHECK(smallest_symplectic_eigenvalue(v) >= 0.5 - 1e-10);
        }
      }
  }

  TEST_CASE("coherent covariance equals the vacuum-seed covariance") {
    for (double n : {0.0, 0.3, 1.2})
      for (double r : {0.0, 1.0, 3.0}) {
        const auto c = build_covariance(SeededPdcConfig::coherent(0.7, 1.9, n, r));
        const auto v = build_covariance(SeededPdcConfig::thermal(0, 0, n));
        CHECK(max_abs(c.matrix() - v.matrix()) < 1e-13);
      }
  }

  TEST_CASE("partial transpose") {
    const CovarianceMatrix4 vac;
    CHECK(max_abs(partial_transpose_cov(vac).matrix() - vac.matrix()) == 0.0);
    const auto v = build_covariance(SeededPdcConfig::thermal(0.4, 1.1, 0.6));
    const auto pt = partial_transpose_cov(v);
    CHECK(pt(1, 3) == Approx(-v(1, 3)));
    CHECK(pt(0, 2) == Approx(v(0, 2)));
    CHECK(max_abs(partial_transpose_cov(pt).matrix() - v.matrix()) == 0.0);
  }

  TEST_CASE("symplectic eigenvalues") {
    CHECK(smallest_symplectic_eigenvalue(CovarianceMatrix4()) == Approx(0.5).epsilon(1e-15));
    const auto twin = partial_transpose_cov(build_covariance(SeededPdcConfig::thermal(0, 0, 1)));
    CHECK(smallest_symplectic_eigenvalue(twin) == Approx(1.5 - std::sqrt(2.0)).epsilon(1e-12));
    const auto edge = partial_transpose_cov(build_covariance(SeededPdcConfig::thermal(1, 1, 1.0 / 3.0)));
    CHECK(smallest_symplectic_eigenvalue(edge) == Approx(0.5).epsilon(1e-12));
  }

  TEST_CASE("general and standard-form eigenvalues agree") {
    for (double n : {0.0, 0.1, 0.8, 2.0})
      for (double a : {0.0, 0.4, 1.5})
        for (double b : {0.0, 0.9}) {
          const auto v = partial_transpose_cov(build_covariance(SeededPdcConfig::thermal(a, b, n)));
          const double std_form = d_minus_standard_form(v(0, 0), v(2, 2), std::abs(v(0, 2)));
          CHECK(std::abs(smallest_symplectic_eigenvalue(v) - std_form) < 1e-10);
        }
  }

  TEST_CASE("Gaussian entanglement decisions") {
    CHECK_FALSE(is_entangled_gaussian(SeededPdcConfig::thermal(1, 1, 0.2)).entangled);
    CHECK(is_entangled_gaussian(SeededPdcConfig::thermal(1, 1, 0.5)).entangled);
    for (double za : {0.0, 1.0, 2.5})
      CHECK(is_entangled_gaussian(SeededPdcConfig::squeezed(1, 1, 0.01, za, 0.3, 0.7)).entangled);
    CHECK_FALSE(is_entangled_gaussian(SeededPdcConfig::coherent(0.5, 0.25, 0, M_PI)).entangled);
    CHECK(is_entangled_gaussian(SeededPdcConfig::coherent(5, 5, 1e-6, M_PI)).entangled);
  }

  TEST_CASE("thermal decision matches the separability inequality on a dense grid") {
    for (int i = 0; i <= 30; ++i)
      for (int j = 0; j <= 30; ++j)
        for (int k = 1; k <= 20; ++k) {
          const double a = 2.0 * i / 30, b = 2.0 * j / 30, n = 1.0 * k / 20;
          const double margin = n * (1 + a + b) - a * b;
          if (std::abs(margin) < 1e-9) continue;
          const auto d = is_entangled_gaussian(SeededPdcConfig::thermal(a, b, n));
          CHECK(d.entangled == (margin > 0.0));
          CHECK(d.entangled == (p_ent_sign_positive(a, b, n)));
        }
  }

  TEST_CASE("covariance matrix validation") {
    Eigen::Matrix4d bad = Eigen::Matrix4d::Identity();
    bad(0, 1) = 1e-6;
    CHECK_THROWS_AS(CovarianceMatrix4{bad}, NumericalError);
    bad(0, 1) = NAN;
    CHECK_THROWS_AS(CovarianceMatrix4{bad}, NumericalError);
  }
}
