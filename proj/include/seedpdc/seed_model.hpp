#pragma once

#include <string_view>
#include <utility>
#include <variant>

namespace seedpdc {

// Phases are in radians. The closed-form side uses the Heisenberg relation
//   A_j = sqrt(N+1) a_j + e^{i phi} sqrt(N) a_j'^dagger,
// coherent amplitudes alpha = sqrt(M) e^{i gamma} and squeezed vacua with
// <a^2> = -e^{i zeta} sqrt(N_s (1 + N_s)).

struct Thermal {
  double mu = 0.0;
};

struct Coherent {
  double m = 0.0;
  double gamma = 0.0;
};

struct SqueezedVacuum {
  double ns = 0.0;
  double zeta = 0.0;
};

struct Vacuum {};

using SeedSpec = std::variant<Thermal, Coherent, SqueezedVacuum, Vacuum>;

enum class SeedFamily { Thermal, Coherent, Squeezed, Vacuum };

std::string_view to_string(SeedFamily family);
SeedFamily parse_family(std::string_view name);

struct PdcParams {
  double n_gain = 0.0;  ///< N = sinh^2 |kappa|
  double phi = 0.0;
};

/// Homogeneous seed pair plus PDC parameters. A Vacuum seed may pair with any
/// family since it is the zero-intensity member of each.
class SeededPdcConfig {
 public:
  /// Throws ConfigError on negative/non-finite intensities or mixed families.
  SeededPdcConfig(SeedSpec seed_a, SeedSpec seed_b, PdcParams pdc);

  static SeededPdcConfig thermal(double mu_a, double mu_b, double n_gain);
  static SeededPdcConfig coherent(double m_a, double m_b, double n_gain, double phase_r);
  static SeededPdcConfig squeezed(double ns_a, double ns_b, double n_gain,
                                  double zeta_a = 0.0, double zeta_b = 0.0, double phi = 0.0);
  /// Builds a config from a family name and unified intensities (mu, M or N_s).
  static SeededPdcConfig from_family(SeedFamily family, double s_a, double s_b, double n_gain,
                                     double phase_r = 0.0, double zeta_a = 0.0,
                                     double zeta_b = 0.0, double phi = 0.0);

  const SeedSpec& seed_a() const noexcept { return seed_a_; }
  const SeedSpec& seed_b() const noexcept { return seed_b_; }
  const PdcParams& pdc() const noexcept { return pdc_; }
  SeedFamily family() const noexcept { return family_; }

  double intensity_a() const noexcept;
  double intensity_b() const noexcept;
  /// gamma_A + gamma_B - phi; zero for non-coherent families.
  double coherent_phase() const noexcept;

  SeededPdcConfig with_gain(double n_gain) const;

 private:
  SeedSpec seed_a_;
  SeedSpec seed_b_;
  PdcParams pdc_;
  SeedFamily family_;
};

double intensity(const SeedSpec& seed) noexcept;
SeedFamily family_of(const SeedSpec& seed) noexcept;

struct MomentSet {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double var_diff = 0.0;  ///< Var(n_A - n_B)
  double cross = 0.0;     ///< <n_A n_B>
  double fac2_a = 0.0;    ///< <n_A (n_A - 1)>
  double fac2_b = 0.0;

  /// fac2_a + fac2_b - 2 cross, the left side of the two-mode Lee inequality.
  double lee_form() const noexcept { return fac2_a + fac2_b - 2.0 * cross; }
  /// Residual of var_diff = lee_form + mean_a + mean_b - (mean_a - mean_b)^2.
  double consistency_residual() const noexcept;
};

std::pair<double, double> output_means(const SeededPdcConfig& cfg);

/// Photon-number variance of the single-mode seed.
double input_variance(const SeedSpec& seed) noexcept;

MomentSet output_moments(const SeededPdcConfig& cfg);

}  // namespace seedpdc
