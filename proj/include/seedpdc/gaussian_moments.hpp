#pragma once

#include <array>
#include <complex>

#include "seedpdc/seed_model.hpp"

namespace seedpdc {

using cplx = std::complex<double>;

/// First and central second moments of the two output modes (index 0 = A,
/// 1 = B) of a Gaussian state:
///   mean[j]  = <a_j>
///   n[j][k]  = <da_j^dagger da_k>
///   m[j][k]  = <da_j da_k>
struct ModeMoments {
  std::array<cplx, 2> mean{};
  std::array<std::array<cplx, 2>, 2> n{};
  std::array<std::array<cplx, 2>, 2> m{};
};

/// Seed moments propagated through the PDC Bogoliubov transformation.
ModeMoments output_mode_moments(const SeededPdcConfig& cfg);

/// <n_A>, <n_B>, <n_A n_B>, <n_j(n_j-1)> from the Gaussian moment theorem
/// applied to normally ordered products.
MomentSet photon_moments(const ModeMoments& mm);

}  // namespace seedpdc
