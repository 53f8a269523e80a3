#include <immintrin.h>

#include <cmath>
#include <limits>

#include "seedpdc/simd/kernels.hpp"

namespace seedpdc::simd {
namespace avx2 {

MomentSums moment_sums(std::span<const double> p, std::span<const double> na,
                       std::span<const double> nb) {
  const std::size_t n = p.size();
  __m256d sp = _mm256_setzero_pd(), sa = sp, sb = sp, saa = sp, sbb = sp, sab = sp;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vp = _mm256_loadu_pd(p.data() + i);
    const __m256d va = _mm256_loadu_pd(na.data() + i);
    const __m256d vb = _mm256_loadu_pd(nb.data() + i);
    const __m256d pa = _mm256_mul_pd(vp, va);
    const __m256d pb = _mm256_mul_pd(vp, vb);
    sp = _mm256_add_pd(sp, vp);
    sa = _mm256_add_pd(sa, pa);
    sb = _mm256_add_pd(sb, pb);
    saa = _mm256_fmadd_pd(pa, va, saa);
    sbb = _mm256_fmadd_pd(pb, vb, sbb);
    sab = _mm256_fmadd_pd(pa, vb, sab);
  }
  auto hsum = [](__m256d v) {
    alignas(32) double t[4];
    _mm256_store_pd(t, v);
    return (t[0] + t[1]) + (t[2] + t[3]);
  };
  MomentSums s{hsum(sp), hsum(sa), hsum(sb), hsum(saa), hsum(sbb), hsum(sab)};
  for (; i < n; ++i) {
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

// Same operation order as p_parameters_one, no fused multiply-add, so results
// match the scalar path exactly.
void p_parameters(std::span<const double> mean_a, std::span<const double> mean_b,
                  std::span<const double> var_diff, const PBatch& out) {
  const std::size_t n = mean_a.size();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d nan = _mm256_set1_pd(std::numeric_limits<double>::quiet_NaN());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ma = _mm256_loadu_pd(mean_a.data() + i);
    const __m256d mb = _mm256_loadu_pd(mean_b.data() + i);
    const __m256d vd = _mm256_loadu_pd(var_diff.data() + i);
    const __m256d shot = _mm256_add_pd(ma, mb);
    const __m256d d = _mm256_sub_pd(ma, mb);
    const __m256d d2 = _mm256_mul_pd(d, d);
    __m256d ssn = _mm256_sub_pd(one, _mm256_div_pd(vd, shot));
    __m256d lee = _mm256_sub_pd(one, _mm256_div_pd(_mm256_add_pd(vd, d2), shot));
    __m256d ent = _mm256_sub_pd(one, _mm256_div_pd(_mm256_sub_pd(vd, d2), shot));
    const __m256d empty = _mm256_cmp_pd(shot, zero, _CMP_EQ_OQ);
    ssn = _mm256_blendv_pd(ssn, nan, empty);
    lee = _mm256_blendv_pd(lee, nan, empty);
    ent = _mm256_blendv_pd(ent, nan, empty);
    _mm256_storeu_pd(out.p_ssn.data() + i, ssn);
    _mm256_storeu_pd(out.p_lee.data() + i, lee);
    _mm256_storeu_pd(out.p_ent.data() + i, ent);
  }
  for (; i < n; ++i) {
    if (mean_a[i] + mean_b[i] == 0.0) {
      out.p_ssn[i] = out.p_lee[i] = out.p_ent[i] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    p_parameters_one(mean_a[i], mean_b[i], var_diff[i], out.p_ssn[i], out.p_lee[i],
                     out.p_ent[i]);
  }
}

}  // namespace avx2

const Kernels& avx2_kernel_table() {
  static const Kernels k{Isa::Avx2, &avx2::moment_sums, &avx2::p_parameters};
  return k;
}

}  // namespace seedpdc::simd
