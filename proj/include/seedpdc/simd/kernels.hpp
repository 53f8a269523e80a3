#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace seedpdc::simd {

/// Weighted photon-number sums over a population vector.
struct MomentSums {
  double p = 0.0;      ///< sum p
  double na = 0.0;     ///< sum p n_A
  double nb = 0.0;
  double na2 = 0.0;    ///< sum p n_A^2
  double nb2 = 0.0;
  double nanb = 0.0;   ///< sum p n_A n_B
};

/// Output of the batched P-parameter kernel. Entries where the shot-noise
/// denominator vanishes are NaN.
struct PBatch {
  std::span<double> p_ssn;
  std::span<double> p_lee;
  std::span<double> p_ent;
};

enum class Isa { Scalar, Avx2 };
std::string_view to_string(Isa isa);

/// Kernel table for one instruction set.
struct Kernels {
  Isa isa;
  MomentSums (*moment_sums)(std::span<const double> p, std::span<const double> na,
                            std::span<const double> nb);
  void (*p_parameters)(std::span<const double> mean_a, std::span<const double> mean_b,
                       std::span<const double> var_diff, const PBatch& out);
};

const Kernels& scalar_kernels();
/// nullptr when not compiled in or not supported by the running CPU.
const Kernels* avx2_kernels();

/// Selected once per process: AVX2 when the CPU supports it, unless the
/// environment variable SEEDPDC_SIMD=scalar forces the reference path.
const Kernels& active();

/// Scalar reference for one point; the batched kernels reproduce it bit for bit.
inline void p_parameters_one(double mean_a, double mean_b, double var_diff, double& p_ssn,
                             double& p_lee, double& p_ent) {
  const double shot = mean_a + mean_b;
  const double d = mean_a - mean_b;
  const double d2 = d * d;
  p_ssn = 1.0 - var_diff / shot;
  p_lee = 1.0 - (var_diff + d2) / shot;
  p_ent = 1.0 - (var_diff - d2) / shot;
}

}  // namespace seedpdc::simd
