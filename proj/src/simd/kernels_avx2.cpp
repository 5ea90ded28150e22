// Compiled with -mavx2 only; callers reach these through the dispatcher,
// which checks CPUID first.

#include <immintrin.h>

#include <cmath>
#include <limits>

#include "fluxqm/simd/kernels.hpp"

namespace fluxqm::simd::avx2 {

void sector_energies(std::span<const double> w, std::span<const double> m, double g_eff, double chi,
                     std::span<double> out) {
    const std::size_t n = out.size();
    const __m256d vg = _mm256_set1_pd(g_eff);
    const __m256d vc = _mm256_set1_pd(chi);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vw = _mm256_loadu_pd(w.data() + i);
        const __m256d vm = _mm256_loadu_pd(m.data() + i);
        const __m256d kin = _mm256_mul_pd(vg, vw);
        const __m256d att = _mm256_mul_pd(vc, _mm256_mul_pd(vm, vm));
        _mm256_storeu_pd(out.data() + i, _mm256_sub_pd(kin, att));
    }
    for (; i < n; ++i) out[i] = g_eff * w[i] - chi * (m[i] * m[i]);
}

double min_value(std::span<const double> values) {
    const std::size_t n = values.size();
    __m256d vmin = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vmin = _mm256_min_pd(vmin, _mm256_loadu_pd(values.data() + i));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vmin);
    double best = lanes[0];
    for (int k = 1; k < 4; ++k) best = lanes[k] < best ? lanes[k] : best;
    for (; i < n; ++i) best = values[i] < best ? values[i] : best;
    return best;
}

void sturm_counts(std::span<const double> diag, std::span<const double> off_sq,
                  const std::array<double, kSturmLanes>& shifts, double pivmin,
                  std::array<int, kSturmLanes>& counts) {
    static_assert(kSturmLanes == 4);
    const __m256d sigma = _mm256_loadu_pd(shifts.data());
    const __m256d vpiv = _mm256_set1_pd(pivmin);
    const __m256d vnegpiv = _mm256_set1_pd(-pivmin);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256i acc = _mm256_setzero_si256();
    __m256d q = _mm256_set1_pd(1.0);
    for (std::size_t i = 0; i < diag.size(); ++i) {
        const __m256d d = _mm256_sub_pd(_mm256_set1_pd(diag[i]), sigma);
        q = i == 0 ? d : _mm256_sub_pd(d, _mm256_div_pd(_mm256_set1_pd(off_sq[i - 1]), q));
        const __m256d small = _mm256_cmp_pd(_mm256_andnot_pd(sign_mask, q), vpiv, _CMP_LT_OQ);
        q = _mm256_blendv_pd(q, vnegpiv, small);
        const __m256d neg = _mm256_cmp_pd(q, zero, _CMP_LT_OQ);
        // all-ones lanes are -1 as integers
        acc = _mm256_sub_epi64(acc, _mm256_castpd_si256(neg));
    }
    alignas(32) long long lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (int k = 0; k < 4; ++k) counts[k] = static_cast<int>(lanes[k]);
}

}  // namespace fluxqm::simd::avx2
