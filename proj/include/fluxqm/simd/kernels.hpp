#pragma once

// Data-parallel inner loops with a scalar reference and an AVX2 variant.
// The variant is chosen once at runtime from CPUID; both paths perform the
// same IEEE operations in the same order, so results are bit-identical.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

namespace fluxqm::simd {

enum class Isa { scalar, avx2 };

/// Instruction set used by the dispatching entry points below.
Isa active_isa();

/// True when the running CPU can execute the AVX2 variants.
bool avx2_supported();

/// Override dispatch (tests, benchmarking). Requesting avx2 on a CPU without
/// it falls back to scalar. Also honoured: FLUXQM_SIMD=scalar|avx2 at startup.
void force_isa(Isa isa);

std::string_view isa_name(Isa isa);

inline constexpr std::size_t kSturmLanes = 4;

/// out[i] = g_eff * w[i] - chi * m[i]^2. All spans must have equal length.
void sector_energies(std::span<const double> w, std::span<const double> m, double g_eff, double chi,
                     std::span<double> out);

/// Smallest element; +inf for an empty span. NaNs are not expected.
double min_value(std::span<const double> values);

/// Sturm sequence counts for a symmetric tridiagonal matrix with diagonal
/// `diag` and squared off-diagonal `off_sq` (size n-1): counts[j] is the
/// number of eigenvalues strictly below shifts[j].
void sturm_counts(std::span<const double> diag, std::span<const double> off_sq,
                  const std::array<double, kSturmLanes>& shifts, double pivmin,
                  std::array<int, kSturmLanes>& counts);

// Direct access to each variant, used by the equivalence tests.
namespace scalar {
void sector_energies(std::span<const double> w, std::span<const double> m, double g_eff, double chi,
                     std::span<double> out);
double min_value(std::span<const double> values);
void sturm_counts(std::span<const double> diag, std::span<const double> off_sq,
                  const std::array<double, kSturmLanes>& shifts, double pivmin,
                  std::array<int, kSturmLanes>& counts);
}  // namespace scalar

namespace avx2 {
void sector_energies(std::span<const double> w, std::span<const double> m, double g_eff, double chi,
                     std::span<double> out);
double min_value(std::span<const double> values);
void sturm_counts(std::span<const double> diag, std::span<const double> off_sq,
                  const std::array<double, kSturmLanes>& shifts, double pivmin,
                  std::array<int, kSturmLanes>& counts);
}  // namespace avx2

}  // namespace fluxqm::simd
