#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fluxqm/linalg.hpp"
#include "fluxqm/schrodinger1d.hpp"

namespace fluxqm {

// Tight-binding ring whose Peierls phase is the quantized cavity flux. In each
// momentum-occupation sector the problem is a single oscillator
//   H = -2t [C cos(eta x) - S sin(eta x)] + hbar omega a^+a,
// with x = (a + a^+)/sqrt2.

/// Occupation data of one momentum sector.
struct TBSector {
    std::vector<int> occupations;  // momentum indices n, k a = 2 pi n / M_sites
    int m_sites = 0;
    double c_sum = 0.0;  // sum cos(k a)
    double s_sum = 0.0;  // sum sin(k a)
    double e_j_amp = 0.0;  // sqrt(C^2 + S^2)
    double delta = 0.0;    // atan2(S, C)
};

/// Throws PauliError on a repeated index, DomainError on an index outside
/// [0, m_sites).
TBSector sector_constants(std::span<const int> occupied, int m_sites);

/// Sector built directly from (C, S); occupations left empty.
TBSector sector_from_sums(double c_sum, double s_sum);

/// eta = (2 pi / M_sites) (Phi / Phi0).
double peierls_eta(double flux_quanta, int m_sites);

/// Generalized Laguerre polynomial L_n^(alpha)(x) by upward recursion in n.
double laguerre(int n, int alpha, double x);

/// <m| exp(sign * i lambda (a + a^+)) |n>
///   = e^{-lambda^2/2} sqrt(min!/max!) (sign i lambda)^|m-n| L_min^(|m-n|)(lambda^2).
std::complex<double> displacement_matrix_element(int m, int n, double lambda, int sign);

/// Full cutoff x cutoff block of exp(sign * i lambda (a + a^+)).
Eigen::MatrixXcd displacement_matrix(double lambda, int sign, int cutoff);

/// Sector Hamiltonian on |0>..|cutoff-1>, assembled from the displacement
/// blocks with lambda = eta / sqrt2. Hermitian by construction.
HermitianMatrix sector_hamiltonian_fock(const TBSector& sector, double t, double eta, double hbar_omega,
                                        int cutoff);

struct FockLevels {
    std::vector<double> levels;
    int cutoff_used = 0;
    double convergence_change = 0.0;
};

/// Lowest n_levels of the Fock-basis Hamiltonian, doubling the cutoff until the
/// levels move by < 1e-9 relative (at most three doublings, then
/// ConvergenceError). Requires cutoff >= 4 n_levels.
FockLevels sector_spectrum_fock(const TBSector& sector, double t, double eta, double hbar_omega, int cutoff,
                                int n_levels);

/// Same operator in the x representation,
///   (hbar omega / 2)(-d^2/dx^2 + x^2) - 2t [C cos(eta x) - S sin(eta x)].
/// Levels carry the +hbar omega/2 zero-point energy that the Fock form lacks.
BoundStates sector_spectrum_xrep(const TBSector& sector, double t, double eta, double hbar_omega,
                                 const Grid1D& grid, int n_levels);

/// Lowest levels of 4 E_C n^2 + (E_L/2)(phi - phi_ext)^2 - E_J cos(phi) in
/// the phase representation, n = -i d/dphi.
struct RfSquidParams {
    double e_j;
    double phi_ext;
    double e_l;
    double e_c;
    double beta_ratio;  // E_J / E_L
};

/// Throws DomainError for eta == 0.
RfSquidParams rf_squid_map(const TBSector& sector, double t, double eta, double hbar_omega);

BoundStates rf_squid_spectrum(const RfSquidParams& params, const Grid1D& phase_grid, int n_levels);

/// Phase grid covering phi_ext + eta * [x_min, x_max]: the image of an x grid.
Grid1D phase_grid_for(const RfSquidParams& params, double eta, const Grid1D& x_grid);

/// Splitting of the two lowest levels.
double tunnel_splitting(std::span<const double> levels);

}  // namespace fluxqm
