#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "fluxqm/model.hpp"

namespace fluxqm {

// Brute-force reference for the ring-cavity Hamiltonian in a fixed fermion
// sector. Operators are assembled from raw Fock matrix elements only; nothing
// here calls the closed-form modules.

struct OracleReport {
    std::vector<double> levels;  // ascending
    int cutoff_used = 0;
    bool converged = false;
    double convergence_change = std::numeric_limits<double>::quiet_NaN();  // max rel change under doubling
    // Filled by attach_comparison().
    double max_abs_residual = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> relative_errors;
};

struct OracleOptions {
    bool check_convergence = true;
    double convergence_tol = 1e-9;
};

/// Dense Hamiltonian on |0>..|cutoff-1>:
///   g_eff W + hbar omega n + g N phi^2 X^2 - (2 g phi M + eta Sigma) X.
Eigen::MatrixXd oracle_hamiltonian(const ModelParams& p, const FermionConfig& cfg, int cutoff);

OracleReport oracle_spectrum(const ModelParams& p, const FermionConfig& cfg, int cutoff, int n_levels,
                             const OracleOptions& options = {});

/// Ground-state boson observables from the oracle eigenvector.
struct OracleGroundState {
    double energy;
    double mean_a;      // <a> (real in this model)
    double x_mean;      // <x>, x = (a + a^+)/sqrt2
    double x_variance;  // <x^2> - <x>^2
    double p_variance;  // <p^2> - <p>^2
};

OracleGroundState oracle_ground_state(const ModelParams& p, const FermionConfig& cfg, int cutoff);

enum class CompareMode { absolute_levels, constant_offset };

struct ComparisonReport {
    std::vector<double> relative_errors;
    double max_relative_error = 0.0;
    std::size_t argmax = 0;
    double fitted_offset = 0.0;  // reference - candidate, constant_offset mode only
    double tolerance = 0.0;
    bool pass = false;
};

/// Per-level relative error |a - b| / max(|b|, scale_floor). In
/// constant_offset mode the mean of (b - a) is removed first.
/// Throws UsageError on length mismatch.
ComparisonReport compare_spectra(std::span<const double> candidate, std::span<const double> reference,
                                 double tol, CompareMode mode = CompareMode::absolute_levels,
                                 double scale_floor = 1.0);

/// Records residuals of `analytic` against report.levels into the report.
void attach_comparison(OracleReport& report, std::span<const double> analytic, double scale_floor = 1.0);

}  // namespace fluxqm
