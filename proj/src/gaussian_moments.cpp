#include "seedpdc/gaussian_moments.hpp"

#include <cmath>
#include <variant>

namespace seedpdc {
namespace {

struct SeedMoments {
  cplx mean{};
  double n = 0.0;  // <da^dagger da>
  cplx m{};        // <da da>
};

SeedMoments seed_moments(const SeedSpec& seed) {
  SeedMoments s;
  if (const auto* t = std::get_if<Thermal>(&seed)) {
    s.n = t->mu;
  } else if (const auto* c = std::get_if<Coherent>(&seed)) {
    s.mean = std::polar(std::sqrt(c->m), c->gamma);
  } else if (const auto* q = std::get_if<SqueezedVacuum>(&seed)) {
    s.n = q->ns;
    s.m = -std::polar(std::sqrt(q->ns * (1.0 + q->ns)), q->zeta);
  }
  return s;
}

// A quasi-classical variable z_mode or z_mode^* of the normally ordered
// Gaussian moment theorem.
struct Var {
  int mode;
  bool conj;
};

cplx mean_of(const ModeMoments& mm, Var x) {
  return x.conj ? std::conj(mm.mean[x.mode]) : mm.mean[x.mode];
}

cplx pair_of(const ModeMoments& mm, Var x, Var y) {
  if (x.conj && !y.conj) return mm.n[x.mode][y.mode];
  if (!x.conj && y.conj) return mm.n[y.mode][x.mode];
  if (!x.conj) return mm.m[x.mode][y.mode];
  return std::conj(mm.m[x.mode][y.mode]);
}

cplx fourth_moment(const ModeMoments& mm, const Var (&x)[4]) {
  const cplx mu[4] = {mean_of(mm, x[0]), mean_of(mm, x[1]), mean_of(mm, x[2]), mean_of(mm, x[3])};
  auto c = [&](int i, int j) { return pair_of(mm, x[i], x[j]); };
  cplx total = mu[0] * mu[1] * mu[2] * mu[3];
  total += c(0, 1) * mu[2] * mu[3] + c(0, 2) * mu[1] * mu[3] + c(0, 3) * mu[1] * mu[2] +
           c(1, 2) * mu[0] * mu[3] + c(1, 3) * mu[0] * mu[2] + c(2, 3) * mu[0] * mu[1];
  total += c(0, 1) * c(2, 3) + c(0, 2) * c(1, 3) + c(0, 3) * c(1, 2);
  return total;
}

}  // namespace

ModeMoments output_mode_moments(const SeededPdcConfig& cfg) {
  const SeedMoments a = seed_moments(cfg.seed_a());
  const SeedMoments b = seed_moments(cfg.seed_b());
  const double n = cfg.pdc().n_gain;
  const double c = std::sqrt(n + 1.0);
  const double s = std::sqrt(n);
  const cplx eta = std::polar(1.0, cfg.pdc().phi);

  ModeMoments out;
  out.mean[0] = c * a.mean + eta * s * std::conj(b.mean);
  out.mean[1] = c * b.mean + eta * s * std::conj(a.mean);

  out.n[0][0] = c * c * a.n + s * s * (1.0 + b.n);
  out.n[1][1] = c * c * b.n + s * s * (1.0 + a.n);
  out.n[0][1] = c * s * (eta * std::conj(a.m) + std::conj(eta) * b.m);
  out.n[1][0] = std::conj(out.n[0][1]);

  out.m[0][0] = c * c * a.m + eta * eta * s * s * std::conj(b.m);
  out.m[1][1] = c * c * b.m + eta * eta * s * s * std::conj(a.m);
  out.m[0][1] = out.m[1][0] = c * s * eta * (1.0 + a.n + b.n);
  return out;
}

MomentSet photon_moments(const ModeMoments& mm) {
  const Var a{0, false}, ad{0, true}, b{1, false}, bd{1, true};
  MomentSet m;
  m.mean_a = std::norm(mm.mean[0]) + mm.n[0][0].real();
  m.mean_b = std::norm(mm.mean[1]) + mm.n[1][1].real();
  m.fac2_a = fourth_moment(mm, {ad, ad, a, a}).real();
  m.fac2_b = fourth_moment(mm, {bd, bd, b, b}).real();
  m.cross = fourth_moment(mm, {ad, bd, a, b}).real();
  const double d = m.mean_a - m.mean_b;
  m.var_diff = m.fac2_a + m.fac2_b - 2.0 * m.cross + m.mean_a + m.mean_b - d * d;
  return m;
}

}  // namespace seedpdc
