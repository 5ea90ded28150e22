#pragma once

#include <cstdint>
#include <vector>

namespace fluxqm {

/// Conduction-band Dirac ring coupled to the cavity flux.
struct DiracParams {
    double eps0 = 1.0;        // hbar v_F / R
    double beta_berry = 0.5;  // Berry shift of the angular quantization
    int g_d = 4;              // spin-valley degeneracy (level capacity)
    double hbar_omega = 1.0;
    double phi = 0.0;
    int n_electrons = 0;
    double d_eff = 0.0;  // diamagnetic stiffness

    void validate() const;
    double lambda() const { return eps0 * phi; }
};

/// Branch occupations N+ (m >= 0) and N- (m <= -1).
struct ChiralSector {
    int n_plus;
    int n_minus;

    int chirality() const { return n_plus - n_minus; }
    int total() const { return n_plus + n_minus; }

    /// Sector with N electrons and chirality j. Throws DomainError unless
    /// |j| <= N and j has the parity of N.
    static ChiralSector from_chirality(int n_electrons, int j);
};

/// D_eff / eps0 = (2/pi)(phi^2 / N_s) sin(pi nu), doubled when spinful.
/// Returns D_eff in the units of eps0. Throws DomainError for nu outside (0,1)
/// or N_s < 2.
double diamagnetic_stiffness(double eps0, double filling, int n_sites, double phi, bool spinful = false);

/// -(phi/N_s)^2 <H0> with <H0> the exact ground-state energy of N = round(nu N_s)
/// spinless fermions on an N_s-site ring with hopping eps0 (bands -2 eps0 cos k).
double diamagnetic_stiffness_band_sum(double eps0, double filling, int n_sites, double phi);

/// chi = lambda^2 / (hbar omega + 2 D_eff phi^2), lambda = eps0 phi.
double induced_coupling_dirac(const DiracParams& p);

/// E_eff(j) = (eps0 / 4 g_d) N^2 + (eps0 / 4 g_d - chi) j^2.
double effective_energy(int j, const DiracParams& p, double chi);

/// Exact kinetic energy of consecutive filling: each branch fills levels
/// eps0 |m + beta| from the Dirac point outward, g_d electrons per level.
double filled_branch_energy(const ChiralSector& sector, const DiracParams& p);

/// chi_c = eps0 / (4 g_d).
double critical_chi_dirac(const DiracParams& p);

/// phi_c^2 = hbar omega / (4 g_d eps0 - 2 D_eff). Returns phi_c.
/// Throws NoTransitionError when 4 g_d eps0 <= 2 D_eff.
double critical_flux_dirac(const DiracParams& p);

struct FluxDisplacement {
    double mean_a;        // <a> = -lambda j / (hbar omega + 2 phi^2 D_eff)
    double photon_number; // <a^+ a> = <a>^2
};

FluxDisplacement flux_displacement(int j, const DiracParams& p);

/// Admissible chiralities -j_max..j_max with the parity of N, ascending.
std::vector<int> admissible_chiralities(int n_electrons, int j_max);

/// argmin of effective_energy over admissible j. Ties go to smaller |j|,
/// then to positive j. j_max < 0 means N.
int chirality_argmin(const DiracParams& p, double chi, int j_max = -1);

}  // namespace fluxqm
