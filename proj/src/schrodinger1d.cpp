#include "fluxqm/schrodinger1d.hpp"

#include <algorithm>
#include <cmath>

#include "fluxqm/errors.hpp"
#include "fluxqm/linalg.hpp"

namespace fluxqm {

namespace {

SymmetricTridiagonal discretize(double kinetic, const std::function<double(double)>& potential, double x_min,
                                double h, int n) {
    SymmetricTridiagonal t;
    t.diag.resize(n);
    t.off.assign(n - 1, -kinetic / (h * h));
    for (int i = 0; i < n; ++i) t.diag[i] = 2.0 * kinetic / (h * h) + potential(x_min + (i + 1) * h);
    return t;
}

}  // namespace

BoundStates solve_bound_states(double kinetic, const std::function<double(double)>& potential,
                               const Grid1D& grid, int n_levels, double wall_tol) {
    if (!(grid.x_max > grid.x_min)) throw DomainError("solve_bound_states: empty interval");
    if (grid.n_points < 512) throw DomainError("solve_bound_states: need at least 512 grid points");
    if (!(kinetic > 0.0)) throw DomainError("solve_bound_states: kinetic coefficient must be positive");
    if (n_levels < 1) throw DomainError("solve_bound_states: need at least one level");

    const double length = grid.x_max - grid.x_min;
    const int coarse_n = grid.n_points;
    const int fine_n = 2 * coarse_n + 1;
    const double h = length / (coarse_n + 1);

    const auto coarse = discretize(kinetic, potential, grid.x_min, h, coarse_n);
    const auto fine = discretize(kinetic, potential, grid.x_min, h / 2, fine_n);
    const auto e_coarse = tridiagonal_lowest_eigenvalues(coarse, n_levels);
    const auto e_fine = tridiagonal_lowest_eigenvalues(fine, n_levels);

    BoundStates out;
    out.levels.resize(n_levels);
    out.refinement.resize(n_levels);
    for (int i = 0; i < n_levels; ++i) {
        out.levels[i] = (4.0 * e_fine[i] - e_coarse[i]) / 3.0;
        out.refinement[i] = std::fabs(e_fine[i] - e_coarse[i]);
    }

    // Wall check on the fine-grid states: amplitude within 1% of either wall.
    const int edge = std::max(1, fine_n / 100);
    for (int i = 0; i < n_levels; ++i) {
        const auto psi = tridiagonal_eigenvector(fine, e_fine[i]);
        double peak = 0.0, wall = 0.0;
        for (int k = 0; k < fine_n; ++k) {
            peak = std::max(peak, std::fabs(psi[k]));
            if (k < edge || k >= fine_n - edge) wall = std::max(wall, std::fabs(psi[k]));
        }
        out.boundary_amplitude = std::max(out.boundary_amplitude, wall / peak);
    }
    if (out.boundary_amplitude > wall_tol) {
        throw DomainError("solve_bound_states: domain too small, state reaches the wall (relative amplitude " +
                          std::to_string(out.boundary_amplitude) + ")");
    }
    return out;
}

}  // namespace fluxqm
