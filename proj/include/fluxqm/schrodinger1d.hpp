#pragma once

#include <functional>
#include <vector>

namespace fluxqm {

struct Grid1D {
    double x_min;
    double x_max;
    int n_points;  // interior points; the walls sit at x_min and x_max
};

struct BoundStates {
    std::vector<double> levels;       // Richardson-extrapolated, ascending
    std::vector<double> refinement;   // |E(h/2) - E(h)| per level
    double boundary_amplitude = 0.0;  // max |psi| near the walls relative to max |psi|
};

/// Lowest levels of -kinetic d^2/dx^2 + V(x) with hard walls, from second-order
/// central differences at spacing h and h/2 combined by Richardson
/// extrapolation. Throws DomainError when a requested state leans on a wall
/// (boundary_amplitude above wall_tol).
BoundStates solve_bound_states(double kinetic, const std::function<double(double)>& potential,
                               const Grid1D& grid, int n_levels, double wall_tol = 1e-6);

}  // namespace fluxqm
