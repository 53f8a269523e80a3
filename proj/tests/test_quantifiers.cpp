#include <cmath>
#include <random>

#include <doctest.h>

#include "seedpdc/errors.hpp"
#include "seedpdc/quantifiers.hpp"

using namespace seedpdc;
using doctest::Approx;

namespace {

MomentSet moments(const SeededPdcConfig& cfg) { return output_moments(cfg); }

}  // namespace

TEST_SUITE("quantifiers") {
  TEST_CASE("p_ssn examples") {
    CHECK(p_ssn(moments(SeededPdcConfig::thermal(0, 0, 0.3))) == 1.0);
    CHECK(p_ssn(moments(SeededPdcConfig::thermal(1, 1, 1))) == Approx(0.5).epsilon(1e-14));
    CHECK(p_ssn(moments(SeededPdcConfig::thermal(1, 1, 0))) == Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(p_ssn(moments(SeededPdcConfig::squeezed(1, 1, 1)))) < 1e-14);
    CHECK_THROWS_AS(p_ssn(moments(SeededPdcConfig::thermal(0, 0, 0))), UndefinedQuantifier);
  }

  TEST_CASE("p_lee examples") {
    CHECK(p_lee(moments(SeededPdcConfig::thermal(0, 0, 2))) == 1.0);
    CHECK(p_lee(moments(SeededPdcConfig::thermal(1, 1, 1))) == Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(p_lee(moments(SeededPdcConfig::thermal(1, 0, 0.5)))) < 1e-14);
  }

  TEST_CASE("p_ent examples") {
    CHECK(p_ent(moments(SeededPdcConfig::thermal(0, 0, 0.4)), SeedFamily::Thermal) == 1.0);
    CHECK(std::abs(p_ent(moments(SeededPdcConfig::thermal(1, 1, 1.0 / 3.0)), SeedFamily::Thermal)) < 1e-14);
    CHECK(p_ent(moments(SeededPdcConfig::thermal(1, 0, 0.1)), SeedFamily::Thermal) > 0.0);
    CHECK_THROWS_AS(p_ent(moments(SeededPdcConfig::coherent(1, 1, 0.1, 0)), SeedFamily::Coherent),
                    NotApplicable);
    CHECK_THROWS_AS(p_ent(moments(SeededPdcConfig::squeezed(1, 1, 0.1)), SeedFamily::Squeezed),
                    NotApplicable);
  }

  TEST_CASE("thresholds") {
    CHECK(ssn_threshold(SeededPdcConfig::thermal(1, 1, 0)).value == Approx(1.0 / 3.0));
    CHECK(lee_threshold(SeededPdcConfig::thermal(1, 1, 0)).value == Approx(1.0 / 3.0));
    CHECK(lee_threshold(SeededPdcConfig::thermal(1, 0, 0)).value == Approx(0.5));
    CHECK(ssn_threshold(SeededPdcConfig::squeezed(1, 0, 0)).value == Approx(0.75));
    CHECK(lee_threshold(SeededPdcConfig::squeezed(1, 1, 0)).value == Approx(1.0));
    CHECK(ent_threshold_thermal(0, 3) == 0.0);
    CHECK(ent_threshold_thermal(1, 1) == Approx(1.0 / 3.0));
    CHECK(ent_threshold_thermal(2, 3) == Approx(1.0));

    const ThresholdValue always = ssn_threshold(SeededPdcConfig::coherent(0.4, 2.0, 0, 0.0));
    CHECK(always.always);
    CHECK(always.value == 0.0);
    CHECK(lee_threshold(SeededPdcConfig::coherent(1, 1, 0, 0)).value == Approx(0.0));

    const ThresholdReport t = thresholds(SeededPdcConfig::thermal(1, 0, 0));
    CHECK(t.n_ssn.value == Approx(0.25));
    CHECK(t.n_lee.value == Approx(0.5));
    REQUIRE(t.n_ent);
    CHECK(t.n_ent->value == 0.0);
    CHECK(t.n_ent->always);
    CHECK_FALSE(thresholds(SeededPdcConfig::squeezed(1, 1, 0)).n_ent);
  }

  TEST_CASE("p vanishes at each threshold") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 2.0), ph(0.0, 2.0 * M_PI);
    for (int k = 0; k < 50; ++k) {
      const double a = u(rng), b = u(rng);
      const auto th = SeededPdcConfig::thermal(a, b, 0);
      CHECK(std::abs(p_ssn(moments(th.with_gain(ssn_threshold(th).value)))) < 1e-12);
      CHECK(std::abs(p_lee(moments(th.with_gain(lee_threshold(th).value)))) < 1e-12);
      const double ne = ent_threshold_thermal(a, b);
      if (ne > 0.0)
        CHECK(std::abs(p_ent(moments(th.with_gain(ne)), SeedFamily::Thermal)) < 1e-12);

      const auto sq = SeededPdcConfig::squeezed(a, b, 0);
      CHECK(std::abs(p_ssn(moments(sq.with_gain(ssn_threshold(sq).value)))) < 1e-12);
      CHECK(std::abs(p_lee(moments(sq.with_gain(lee_threshold(sq).value)))) < 1e-12);

      const auto co = SeededPdcConfig::coherent(a, b, 0, ph(rng));
      const ThresholdValue cs = ssn_threshold(co);
      if (!cs.always) CHECK(std::abs(p_ssn(moments(co.with_gain(cs.value)))) < 1e-12);
      const ThresholdValue cl = lee_threshold(co);
      if (cl.value > 0.0) CHECK(std::abs(p_lee(moments(co.with_gain(cl.value)))) < 1e-12);
    }
  }

  TEST_CASE("symmetric seeds make the criteria coincide") {
    for (double mu : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      const auto cfg = SeededPdcConfig::thermal(mu, mu, 0);
      const double expect = mu * mu / (1 + 2 * mu);
      CHECK(ssn_threshold(cfg).value == Approx(expect).epsilon(1e-13));
      CHECK(lee_threshold(cfg).value == Approx(expect).epsilon(1e-13));
      CHECK(ent_threshold_thermal(mu, mu) == Approx(expect).epsilon(1e-13));
      const auto sq = SeededPdcConfig::squeezed(mu, mu, 0);
      CHECK(ssn_threshold(sq).value == Approx(lee_threshold(sq).value).epsilon(1e-13));
    }
  }

  TEST_CASE("value-level hierarchy") {
    for (double n : {0.0, 0.05, 0.4, 1.3})
      for (double a : {0.0, 0.2, 1.0, 3.0})
        for (double b : {0.1, 0.9}) {
          const auto th = moments(SeededPdcConfig::thermal(a, b, n));
          const double s = p_ssn(th), l = p_lee(th), e = p_ent(th, SeedFamily::Thermal);
          CHECK(l <= s + 1e-15);
          CHECK(s <= e + 1e-15);
          CHECK(2.0 * s == Approx(l + e).epsilon(1e-13));
          CHECK(s <= 1.0);
          const auto sq = moments(SeededPdcConfig::squeezed(a, b, n));
          CHECK(p_lee(sq) <= p_ssn(sq) + 1e-15);
        }
  }

  TEST_CASE("the two-mode Lee form and p_lee agree in sign") {
    for (double n : {0.05, 0.3, 1.0})
      for (double a : {0.0, 0.5, 2.0})
        for (double b : {0.2, 1.0}) {
          for (const auto& cfg : {SeededPdcConfig::thermal(a, b, n), SeededPdcConfig::coherent(a, b, n, 2.5),
                                  SeededPdcConfig::squeezed(a, b, n)}) {
            const auto m = moments(cfg);
            CHECK((m.lee_form() < 0.0) == (p_lee(m) > 0.0));
          }
        }
  }

  TEST_CASE("per-family closed forms match the moment path") {
    for (double n : {0.05, 0.3, 1.0})
      for (double a : {0.0, 0.5, 2.0})
        for (double b : {0.2, 1.0}) {
          const auto th = moments(SeededPdcConfig::thermal(a, b, n));
          CHECK(p_ssn(th) == Approx(closed_form::thermal_p_ssn(a, b, n)).epsilon(1e-13));
          CHECK(p_lee(th) == Approx(closed_form::thermal_p_lee(a, b, n)).epsilon(1e-13));
          CHECK(p_ent(th, SeedFamily::Thermal) == Approx(closed_form::thermal_p_ent(a, b, n)).epsilon(1e-13));
          for (double r : {0.0, 1.0, 3.0}) {
            const auto co = moments(SeededPdcConfig::coherent(a, b, n, r));
            CHECK(p_ssn(co) == Approx(closed_form::coherent_p_ssn(a, b, n, r)).epsilon(1e-13));
            CHECK(p_lee(co) == Approx(closed_form::coherent_p_lee(a, b, n, r)).epsilon(1e-13));
          }
          const auto sq = moments(SeededPdcConfig::squeezed(a, b, n));
          CHECK(p_ssn(sq) == Approx(closed_form::squeezed_p_ssn(a, b, n)).epsilon(1e-13));
          CHECK(p_lee(sq) == Approx(closed_form::squeezed_p_lee(a, b, n)).epsilon(1e-13));
        }
  }

  TEST_CASE("the quoted squeezed P_SSN misses the threshold") {
    const double na = 1.0, nb = 0.4;
    const double nstar = ssn_threshold(SeededPdcConfig::squeezed(na, nb, 0)).value;
    CHECK(std::abs(closed_form::squeezed_p_ssn(na, nb, nstar)) < 1e-14);
    CHECK(std::abs(closed_form::squeezed_p_ssn_quoted(na, nb, nstar)) > 0.1);
  }

  TEST_CASE("coherent Lee roots agree with bisection") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.01, 3.0), ph(0.0, 2.0 * M_PI);
    for (int k = 0; k < 40; ++k) {
      const double ma = u(rng), mb = u(rng), r = ph(rng);
      const auto roots = coherent::lee_roots(ma, mb, r);
      REQUIRE_FALSE(roots.degenerate);
      const double root = std::cos(r) >= 0.0 ? roots.minus : roots.plus;
      if (root <= 0.0) continue;
      const double bis = coherent::bisect_lee_root(ma, mb, r, 0.0, 2.0 * root + 1.0, 1e-12);
      CHECK(root == Approx(bis).epsilon(1e-9));
    }
    CHECK_THROWS_AS(coherent::bisect_lee_root(1, 1, 0, 1.0, 2.0), NumericalError);
  }

  TEST_CASE("classify examples") {
    const auto below = classify(SeededPdcConfig::thermal(1, 1, 0.2));
    CHECK_FALSE(below.flags.is_ssn);
    CHECK_FALSE(below.flags.is_lee_nonclassical);
    CHECK_FALSE(below.flags.is_entangled);

    const auto above = classify(SeededPdcConfig::thermal(1, 1, 0.5));
    CHECK(above.flags.is_ssn);
    CHECK(above.flags.is_lee_nonclassical);
    CHECK(above.flags.is_entangled);

    const auto co = classify(SeededPdcConfig::coherent(1, 1, 0.01, 0));
    CHECK(co.flags.is_ssn);
    CHECK(co.flags.is_lee_nonclassical);
    CHECK(co.flags.is_entangled);
    CHECK_FALSE(co.p_ent);

    const auto boundary = classify(SeededPdcConfig::thermal(1, 1, 1.0 / 3.0));
    CHECK_FALSE(boundary.flags.is_entangled);

    CHECK_THROWS_AS(classify(SeededPdcConfig::thermal(0, 0, 0)), UndefinedQuantifier);
  }
}
