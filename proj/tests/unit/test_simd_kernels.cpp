#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "fluxqm/simd/kernels.hpp"
#include "test_support.hpp"

using namespace fluxqm;

namespace {

std::vector<double> random_ints_as_double(std::size_t n, int lo, int hi) {
    std::vector<double> v(n);
    for (auto& x : v) x = testing::uniform_int(lo, hi);
    return v;
}

}  // namespace

TEST_CASE("scalar sector energies match the formula") {
    const std::vector<double> w{0, 2, 5, 10};
    const std::vector<double> m{0, 0, 3, -2};
    std::vector<double> e(4);
    simd::scalar::sector_energies(w, m, 0.5, 0.25, e);
    CHECK(e[0] == 0.0);
    CHECK(e[1] == 1.0);
    CHECK(e[2] == 2.5 - 2.25);
    CHECK(e[3] == 5.0 - 1.0);
    CHECK(simd::scalar::min_value(e) == 0.0);
    CHECK(simd::scalar::min_value(std::span<const double>(e).subspan(1)) == 0.25);
    CHECK(simd::scalar::min_value({}) == std::numeric_limits<double>::infinity());
}

TEST_CASE("scalar Sturm counts on a diagonal matrix") {
    const std::vector<double> diag{3, 1, 2, 5};
    const std::vector<double> off_sq{0, 0, 0};
    std::array<int, 4> counts{};
    simd::scalar::sturm_counts(diag, off_sq, {0.5, 1.5, 2.5, 10}, 1e-300, counts);
    CHECK(counts == std::array<int, 4>{0, 1, 2, 4});
}

#if defined(FLUXQM_HAVE_AVX2_KERNELS)
TEST_CASE("avx2 variants are bit-identical to scalar") {
    if (!simd::avx2_supported()) {
        MESSAGE("CPU lacks AVX2; equivalence not exercised");
        return;
    }
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 64u, 1001u}) {
        const auto w = random_ints_as_double(n, 0, 500);
        const auto m = random_ints_as_double(n, -40, 40);
        const double g_eff = testing::uniform(0.01, 3.0);
        const double chi = testing::uniform(0.0, 1.0);
        std::vector<double> a(n), b(n);
        simd::scalar::sector_energies(w, m, g_eff, chi, a);
        simd::avx2::sector_energies(w, m, g_eff, chi, b);
        for (std::size_t i = 0; i < n; ++i) REQUIRE(a[i] == b[i]);
        REQUIRE(simd::scalar::min_value(a) == simd::avx2::min_value(a));
    }
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = testing::uniform_int(1, 300);
        std::vector<double> diag(n), off_sq(n - 1);
        for (auto& d : diag) d = testing::uniform(-5, 5);
        for (auto& e : off_sq) e = std::pow(testing::uniform(-2, 2), 2);
        const std::array<double, 4> shifts{testing::uniform(-8, 8), testing::uniform(-8, 8), testing::uniform(-8, 8),
                                           diag[0]};
        std::array<int, 4> a{}, b{};
        simd::scalar::sturm_counts(diag, off_sq, shifts, 1e-300, a);
        simd::avx2::sturm_counts(diag, off_sq, shifts, 1e-300, b);
        REQUIRE(a == b);
    }
}
#endif

TEST_CASE("dispatch can be forced to scalar and back") {
    const auto original = simd::active_isa();
    simd::force_isa(simd::Isa::scalar);
    CHECK(simd::active_isa() == simd::Isa::scalar);
    simd::force_isa(simd::Isa::avx2);
    CHECK(simd::active_isa() == (simd::avx2_supported() ? simd::Isa::avx2 : simd::Isa::scalar));
    simd::force_isa(original);
    CHECK(simd::isa_name(simd::Isa::scalar) == "scalar");
}
