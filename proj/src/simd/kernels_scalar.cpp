#include <cmath>
#include <limits>

#include "seedpdc/simd/kernels.hpp"

namespace seedpdc::simd {
namespace {

MomentSums moment_sums_scalar(std::span<const double> p, std::span<const double> na,
                              std::span<const double> nb) {
  MomentSums s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pa = p[i] * na[i];
    const double pb = p[i] * nb[i];
    s.p += p[i];
    s.na += pa;
    s.nb += pb;
    s.na2 += pa * na[i];
    s.nb2 += pb * nb[i];
    s.nanb += pa * nb[i];
  }
  return s;
}

void p_parameters_scalar(std::span<const double> mean_a, std::span<const double> mean_b,
                         std::span<const double> var_diff, const PBatch& out) {
  for (std::size_t i = 0; i < mean_a.size(); ++i) {
    if (mean_a[i] + mean_b[i] == 0.0) {
      out.p_ssn[i] = out.p_lee[i] = out.p_ent[i] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    p_parameters_one(mean_a[i], mean_b[i], var_diff[i], out.p_ssn[i], out.p_lee[i],
                     out.p_ent[i]);
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{Isa::Scalar, &moment_sums_scalar, &p_parameters_scalar};
  return k;
}

}  // namespace seedpdc::simd
