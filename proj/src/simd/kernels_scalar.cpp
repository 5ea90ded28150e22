#include <cmath>
#include <limits>

#include "fluxqm/simd/kernels.hpp"

namespace fluxqm::simd::scalar {

void sector_energies(std::span<const double> w, std::span<const double> m, double g_eff, double chi,
                     std::span<double> out) {
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = g_eff * w[i] - chi * (m[i] * m[i]);
    }
}

double min_value(std::span<const double> values) {
    double best = std::numeric_limits<double>::infinity();
    for (double v : values) best = v < best ? v : best;
    return best;
}

void sturm_counts(std::span<const double> diag, std::span<const double> off_sq,
                  const std::array<double, kSturmLanes>& shifts, double pivmin,
                  std::array<int, kSturmLanes>& counts) {
    for (std::size_t lane = 0; lane < kSturmLanes; ++lane) {
        const double sigma = shifts[lane];
        int count = 0;
        double q = 1.0;
        for (std::size_t i = 0; i < diag.size(); ++i) {
            q = i == 0 ? diag[0] - sigma : (diag[i] - sigma) - off_sq[i - 1] / q;
            if (std::fabs(q) < pivmin) q = -pivmin;
            count += q < 0.0 ? 1 : 0;
        }
        counts[lane] = count;
    }
}

}  // namespace fluxqm::simd::scalar
