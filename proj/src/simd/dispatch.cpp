#include <atomic>
#include <cstdlib>
#include <string_view>

#include "fluxqm/simd/kernels.hpp"

namespace fluxqm::simd {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && defined(FLUXQM_HAVE_AVX2_KERNELS)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa initial_isa() {
    const bool have = cpu_has_avx2();
    if (const char* env = std::getenv("FLUXQM_SIMD")) {
        const std::string_view v(env);
        if (v == "scalar") return Isa::scalar;
        if (v == "avx2" && have) return Isa::avx2;
    }
    return have ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

}  // namespace

bool avx2_supported() { return cpu_has_avx2(); }

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    if (isa == Isa::avx2 && !cpu_has_avx2()) isa = Isa::scalar;
    current().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

#if defined(FLUXQM_HAVE_AVX2_KERNELS)
#define FLUXQM_DISPATCH(fn, ...) \
    (active_isa() == Isa::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define FLUXQM_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void sector_energies(std::span<const double> w, std::span<const double> m, double g_eff, double chi,
                     std::span<double> out) {
    FLUXQM_DISPATCH(sector_energies, w, m, g_eff, chi, out);
}

double min_value(std::span<const double> values) { return FLUXQM_DISPATCH(min_value, values); }

void sturm_counts(std::span<const double> diag, std::span<const double> off_sq,
                  const std::array<double, kSturmLanes>& shifts, double pivmin,
                  std::array<int, kSturmLanes>& counts) {
    FLUXQM_DISPATCH(sturm_counts, diag, off_sq, shifts, pivmin, counts);
}

#undef FLUXQM_DISPATCH

}  // namespace fluxqm::simd
