#include "seedpdc/seed_model.hpp"

#include <cmath>
#include <string>

#include "seedpdc/errors.hpp"
#include "seedpdc/gaussian_moments.hpp"

namespace seedpdc {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_intensity(double v, const char* what) {
  if (!std::isfinite(v) || v < 0.0)
    throw ConfigError(std::string(what) + " must be finite and >= 0, got " + std::to_string(v));
}

void check_phase(double v, const char* what) {
  if (!std::isfinite(v)) throw ConfigError(std::string(what) + " must be finite");
}

void validate_seed(const SeedSpec& seed) {
  std::visit(overloaded{
                 [](const Thermal& t) { check_intensity(t.mu, "thermal mu"); },
                 [](const Coherent& c) {
                   check_intensity(c.m, "coherent M");
                   check_phase(c.gamma, "coherent gamma");
                 },
                 [](const SqueezedVacuum& s) {
                   check_intensity(s.ns, "squeezed N_s");
                   check_phase(s.zeta, "squeezing phase zeta");
                 },
                 [](const Vacuum&) {},
             },
             seed);
}

const Coherent* as_coherent(const SeedSpec& s) { return std::get_if<Coherent>(&s); }

}  // namespace

std::string_view to_string(SeedFamily family) {
  switch (family) {
    case SeedFamily::Thermal:
      return "thermal";
    case SeedFamily::Coherent:
      return "coherent";
    case SeedFamily::Squeezed:
      return "squeezed";
    case SeedFamily::Vacuum:
      return "vacuum";
  }
  return "unknown";
}

SeedFamily parse_family(std::string_view name) {
  if (name == "thermal") return SeedFamily::Thermal;
  if (name == "coherent") return SeedFamily::Coherent;
  if (name == "squeezed") return SeedFamily::Squeezed;
  if (name == "vacuum") return SeedFamily::Vacuum;
  throw ConfigError("unknown seed family '" + std::string(name) + "'");
}

SeedFamily family_of(const SeedSpec& seed) noexcept {
  return std::visit(overloaded{
                        [](const Thermal&) { return SeedFamily::Thermal; },
                        [](const Coherent&) { return SeedFamily::Coherent; },
                        [](const SqueezedVacuum&) { return SeedFamily::Squeezed; },
                        [](const Vacuum&) { return SeedFamily::Vacuum; },
                    },
                    seed);
}

double intensity(const SeedSpec& seed) noexcept {
  return std::visit(overloaded{
                        [](const Thermal& t) { return t.mu; },
                        [](const Coherent& c) { return c.m; },
                        [](const SqueezedVacuum& s) { return s.ns; },
                        [](const Vacuum&) { return 0.0; },
                    },
                    seed);
}

SeededPdcConfig::SeededPdcConfig(SeedSpec seed_a, SeedSpec seed_b, PdcParams pdc)
    : seed_a_(std::move(seed_a)), seed_b_(std::move(seed_b)), pdc_(pdc) {
  validate_seed(seed_a_);
  validate_seed(seed_b_);
  check_intensity(pdc_.n_gain, "PDC gain N");
  check_phase(pdc_.phi, "PDC phase phi");
  const SeedFamily fa = family_of(seed_a_);
  const SeedFamily fb = family_of(seed_b_);
  if (fa != fb && fa != SeedFamily::Vacuum && fb != SeedFamily::Vacuum)
    throw ConfigError("mixed seed families are not supported: " + std::string(to_string(fa)) +
                      " and " + std::string(to_string(fb)));
  family_ = fa == SeedFamily::Vacuum ? fb : fa;
}

SeededPdcConfig SeededPdcConfig::thermal(double mu_a, double mu_b, double n_gain) {
  return {Thermal{mu_a}, Thermal{mu_b}, PdcParams{n_gain, 0.0}};
}

SeededPdcConfig SeededPdcConfig::coherent(double m_a, double m_b, double n_gain, double phase_r) {
  return {Coherent{m_a, phase_r}, Coherent{m_b, 0.0}, PdcParams{n_gain, 0.0}};
}

SeededPdcConfig SeededPdcConfig::squeezed(double ns_a, double ns_b, double n_gain, double zeta_a,
                                          double zeta_b, double phi) {
  return {SqueezedVacuum{ns_a, zeta_a}, SqueezedVacuum{ns_b, zeta_b}, PdcParams{n_gain, phi}};
}

SeededPdcConfig SeededPdcConfig::from_family(SeedFamily family, double s_a, double s_b,
                                             double n_gain, double phase_r, double zeta_a,
                                             double zeta_b, double phi) {
  switch (family) {
    case SeedFamily::Thermal:
      return thermal(s_a, s_b, n_gain);
    case SeedFamily::Coherent:
      return coherent(s_a, s_b, n_gain, phase_r);
    case SeedFamily::Squeezed:
      return squeezed(s_a, s_b, n_gain, zeta_a, zeta_b, phi);
    case SeedFamily::Vacuum:
      if (s_a != 0.0 || s_b != 0.0) throw ConfigError("vacuum seeds carry no intensity");
      return {Vacuum{}, Vacuum{}, PdcParams{n_gain, phi}};
  }
  throw ConfigError("unknown seed family");
}

double SeededPdcConfig::intensity_a() const noexcept { return intensity(seed_a_); }
double SeededPdcConfig::intensity_b() const noexcept { return intensity(seed_b_); }

double SeededPdcConfig::coherent_phase() const noexcept {
  const Coherent* a = as_coherent(seed_a_);
  const Coherent* b = as_coherent(seed_b_);
  if (a == nullptr && b == nullptr) return 0.0;
  return (a ? a->gamma : 0.0) + (b ? b->gamma : 0.0) - pdc_.phi;
}

SeededPdcConfig SeededPdcConfig::with_gain(double n_gain) const {
  return {seed_a_, seed_b_, PdcParams{n_gain, pdc_.phi}};
}

double MomentSet::consistency_residual() const noexcept {
  const double d = mean_a - mean_b;
  return var_diff - (lee_form() + mean_a + mean_b - d * d);
}

std::pair<double, double> output_means(const SeededPdcConfig& cfg) {
  const double n = cfg.pdc().n_gain;
  const double sa = cfg.intensity_a();
  const double sb = cfg.intensity_b();
  const double common = n * (1.0 + sa + sb);
  double interference = 0.0;
  if (cfg.family() == SeedFamily::Coherent)
    interference = 2.0 * std::sqrt(n * (n + 1.0)) * std::sqrt(sa * sb) *
                   std::cos(cfg.coherent_phase());
  return {sa + common + interference, sb + common + interference};
}

double input_variance(const SeedSpec& seed) noexcept {
  return std::visit(overloaded{
                        [](const Thermal& t) { return t.mu * (1.0 + t.mu); },
                        [](const Coherent& c) { return c.m; },
                        [](const SqueezedVacuum& s) { return 2.0 * s.ns * (s.ns + 1.0); },
                        [](const Vacuum&) { return 0.0; },
                    },
                    seed);
}

MomentSet output_moments(const SeededPdcConfig& cfg) {
  // fac2 and cross come from the Gaussian moment theorem; means and the
  // difference variance use their closed forms. Both routes satisfy the same
  // identity (see MomentSet::consistency_residual).
  MomentSet m = photon_moments(output_mode_moments(cfg));
  const auto [mean_a, mean_b] = output_means(cfg);
  m.mean_a = mean_a;
  m.mean_b = mean_b;
  m.var_diff = input_variance(cfg.seed_a()) + input_variance(cfg.seed_b());
  return m;
}

}  // namespace seedpdc
