#include <cmath>

#include <doctest.h>

#include "seedpdc/errors.hpp"
#include "seedpdc/fock_oracle.hpp"
#include "seedpdc/oracle_check.hpp"
#include "seedpdc/quantifiers.hpp"

using namespace seedpdc;
using namespace seedpdc::oracle;
using doctest::Approx;

namespace {

OracleConfig with_dim(int dim) {
  OracleConfig oc;
  oc.dim = dim;
  return oc;
}

double dense_max(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("fock_oracle") {
  TEST_CASE("ladder operators") {
    const auto two = build_mode_operators(2);
    CHECK(Eigen::MatrixXcd(two.a)(0, 1) == cplx(1.0));
    CHECK(Eigen::MatrixXcd(two.a)(1, 0) == cplx(0.0));
    const auto three = build_mode_operators(3);
    const Eigen::MatrixXcd n(three.n);
    CHECK(dense_max(n - Eigen::Vector3cd(0, 1, 2).asDiagonal().toDenseMatrix()) < 1e-15);
    const auto six = build_mode_operators(6);
    const Eigen::MatrixXcd comm = Eigen::MatrixXcd(six.a * six.adag - six.adag * six.a);
    Eigen::VectorXcd expect = Eigen::VectorXcd::Ones(6);
    expect(5) = 1.0 - 6.0;
    CHECK(dense_max(comm - Eigen::MatrixXcd(expect.asDiagonal())) < 1e-14);
    CHECK_THROWS_AS(build_mode_operators(1), ConfigError);
  }

  TEST_CASE("block exponential is unitary and matches a dense eigensolve") {
    const int d = 6;
    const auto u = pdc_unitary(cplx(0.2, 0.3), d);
    CHECK(u->unitarity_residual() < 1e-13);
    CHECK(u->block_count() == 2 * d - 1);
    const auto ops = build_two_mode_operators(d);
    const Eigen::MatrixXcd h = Eigen::MatrixXcd(cplx(0.2, 0.3) * (ops.a_a * ops.a_b) +
                                                cplx(0.2, -0.3) * SpMatrix(ops.a_a.adjoint() * ops.a_b.adjoint()));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const Eigen::MatrixXcd ref = es.eigenvectors() *
                                 es.eigenvalues().unaryExpr([](double l) { return std::exp(cplx(0, l)); }).asDiagonal() *
                                 es.eigenvectors().adjoint();
    CHECK(dense_max(u->dense() - ref) < 1e-12);
    SpMatrix not_hermitian(2, 2);
    not_hermitian.insert(0, 1) = 1.0;
    CHECK_THROWS_AS(BlockUnitary::exp_i(not_hermitian), NumericalError);
  }

  TEST_CASE("seed states") {
    const Eigen::MatrixXcd vac = build_seed_state(Vacuum{}, with_dim(10));
    CHECK(vac(0, 0) == cplx(1.0));
    CHECK(dense_max(vac) == 1.0);

    const Eigen::MatrixXcd th = build_seed_state(Thermal{0.5}, with_dim(60));
    double mean = 0.0;
    for (int n = 0; n < 60; ++n) mean += n * th(n, n).real();
    CHECK(mean == Approx(0.5).epsilon(1e-8));

    const Eigen::MatrixXcd sq = build_seed_state(SqueezedVacuum{0.5, 0.0}, with_dim(60));
    mean = 0.0;
    double odd = 0.0;
    for (int n = 0; n < 60; ++n) {
      mean += n * sq(n, n).real();
      if (n % 2) odd += sq(n, n).real();
    }
    CHECK(mean == Approx(0.5).epsilon(1e-6));
    CHECK(odd < 1e-14);

    CHECK_THROWS_AS(build_seed_state(Thermal{1.0}, with_dim(4)), TruncationInadequate);
  }

  TEST_CASE("literal generators reproduce the closed-form conventions") {
    const int d = 60;
    const auto m = build_mode_operators(d);
    const Eigen::VectorXcd coh = displaced_vacuum(std::polar(std::sqrt(0.8), M_PI / 2 - 0.6), d);
    const cplx amp = coh.dot(Eigen::MatrixXcd(m.a) * coh);
    CHECK(std::abs(amp - std::polar(std::sqrt(0.8), 0.6)) < 1e-12);

    const double ns = 0.7, zeta = 0.9;
    const Eigen::VectorXcd sq = squeezed_vacuum(std::polar(0.5 * std::asinh(std::sqrt(ns)), -zeta - M_PI / 2), d);
    const cplx m2 = sq.dot(Eigen::MatrixXcd(m.a * m.a) * sq);
    CHECK(std::abs(m2 + std::polar(std::sqrt(ns * (1 + ns)), zeta)) < 1e-10);
  }

  TEST_CASE("evolution") {
    const auto in = build_input_state(SeededPdcConfig::thermal(0.3, 0.2, 0), with_dim(30));
    const auto same = evolve_pdc(in, {0.0, 0.0}, with_dim(30));
    CHECK(std::abs((same.density_matrix() - in.density_matrix()).norm()) < 1e-14);

    const double n = std::pow(std::sinh(0.3), 2);
    const auto twin = simulate(SeededPdcConfig::thermal(0, 0, n), with_dim(25));
    const MomentSet m = measure_moments(twin);
    CHECK(m.mean_a == Approx(0.0927326).epsilon(1e-6));
    CHECK(m.mean_a == m.mean_b);
    CHECK(m.var_diff < 1e-8);
    CHECK(twin.trace() == Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("moments against frozen oracle values and closed forms") {
    const auto oc = with_dim(120);
    struct Case {
      SeededPdcConfig cfg;
      double mean_a, mean_b, var_diff, cross, fac2_a;
    };
    // Computed once with this oracle at dim 120 and frozen.
    const Case cases[] = {
        {SeededPdcConfig::thermal(0.3, 0.3, 0.2), 0.62000000000000188, 0.62000000000000177,
         0.78000000000000247, 0.99880000000000058, 0.76880000000000037},
        {SeededPdcConfig::coherent(0.3, 1, 0.2, 0), 1.2966563145999439, 1.9966563145999439,
         1.2999999999999956, 4.2042958588518022, 2.1599801240318977},
        {SeededPdcConfig::squeezed(0.5, 0.5, 0.2), 0.89999999999998337, 0.89999999999998415,
         2.999999999999976, 2.489999999999903, 3.0899999999999066},
        {SeededPdcConfig::squeezed(1, 0.3, 0.5, 0.4, 1.1, 0.7), 2.1499999999488373,
         1.4499999999488185, 4.7800000000000482, 10.195645817908396, 15.160645815000473},
    };
    for (const Case& c : cases) {
      const MomentSet om = measure_moments(simulate(c.cfg, oc));
      CHECK(om.mean_a == Approx(c.mean_a).epsilon(1e-9));
      CHECK(om.mean_b == Approx(c.mean_b).epsilon(1e-9));
      CHECK(om.var_diff == Approx(c.var_diff).epsilon(1e-9));
      CHECK(om.cross == Approx(c.cross).epsilon(1e-9));
      CHECK(om.fac2_a == Approx(c.fac2_a).epsilon(1e-9));
      const MomentSet cf = output_moments(c.cfg);
      CHECK(std::abs(cf.mean_a - c.mean_a) < 1e-6);
      CHECK(std::abs(cf.var_diff - c.var_diff) < 1e-6);
      CHECK(std::abs(cf.cross - c.cross) < 1e-6);
      CHECK(std::abs(cf.fac2_a - c.fac2_a) < 1e-6);
    }
  }

  TEST_CASE("covariance") {
    const auto vac = measure_covariance(simulate(SeededPdcConfig::thermal(0, 0, 0), with_dim(8)));
    CHECK((vac.matrix() - 0.5 * Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    for (const auto& cfg : {SeededPdcConfig::thermal(0, 0, 1), SeededPdcConfig::thermal(0.5, 0.5, 0.3)}) {
      const auto v = measure_covariance(simulate(cfg, with_dim(100)));
      CHECK((v.matrix() - build_covariance(cfg).matrix()).cwiseAbs().maxCoeff() < 1e-6);
    }
    const auto sq = SeededPdcConfig::squeezed(1, 0.3, 0.5, 0.4, 1.1, 0.7);
    const auto v = measure_covariance(simulate(sq, with_dim(120)));
    CHECK((v.matrix() - build_covariance(sq).matrix()).cwiseAbs().maxCoeff() < 1e-6);
    CHECK(v(0, 1) == Approx(-0.91835720651134223).epsilon(1e-8));
  }

  TEST_CASE("partial transpose negativity") {
    const auto oc = with_dim(30);
    CHECK(pt_negativity(simulate(SeededPdcConfig::thermal(0, 0, 0), oc)) >= -1e-10);
    CHECK(pt_negativity(simulate(SeededPdcConfig::thermal(0, 0, 0.5), oc)) < -0.1);
    CHECK(pt_negativity(simulate(SeededPdcConfig::thermal(0.5, 0.5, 0.1), oc)) >= -1e-7);
    CHECK(pt_negativity(simulate(SeededPdcConfig::thermal(0.5, 0.5, 0.2), oc)) < -1e-3);
  }

  TEST_CASE("truncation diagnostics") {
    CHECK_THROWS_AS(simulate(SeededPdcConfig::thermal(1, 1, 0.2), with_dim(4)), TruncationInadequate);
    OracleConfig oc = with_dim(20);
    try {
      simulate(SeededPdcConfig::thermal(0.5, 0.5, 0.5), oc);
      FAIL("expected truncation error");
    } catch (const TruncationInadequate& e) {
      CHECK(e.tail_mass() > oc.tail_bound);
    }
    OracleConfig bad;
    bad.dim = 3;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad.dim = 10;
    bad.tail_bound = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
  }

  TEST_CASE("phase calibration and point verification") {
    const auto oc = with_dim(60);
    const auto cal = calibrate_coherent_phase(0.3, 1.0, 0.2, oc);
    CHECK(std::abs(cal.offset) < 1e-8);
    CHECK(cal.amplitude > 0.1);

    VerifyOptions opts;
    const auto rep = verify_point(SeededPdcConfig::thermal(0.3, 0.3, 0.2), with_dim(30), opts);
    CHECK(rep.ok());
    bool saw_pt = false;
    for (const auto& r : rep.rows) saw_pt |= r.quantity == "pt_entangled";
    CHECK(saw_pt);

    const auto sq = verify_point(SeededPdcConfig::squeezed(0.5, 0.5, 0.2), with_dim(100), opts);
    CHECK(sq.ok());
    int ledger = 0;
    for (const auto& r : sq.rows) ledger += (!r.pass && r.ledger_only);
    CHECK(ledger > 0);
  }
}
