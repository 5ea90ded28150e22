#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "fluxqm/model.hpp"

namespace fluxqm {

enum class Phase { balanced, polarized };

std::string_view phase_name(Phase phase);

struct GroundState {
    FermionConfig config;
    double energy;          // sector_energy(config, n = 0)
    std::int64_t order_m;   // M
    double displacement_a;  // <a>
    double photon_number;   // |<a>|^2
    Phase phase;
    bool boundary_contact;  // an orbital sits at |m| = m_max: result may be cutoff-limited
};

/// {-K, ..., K} with K = (N-1)/2. Throws DomainError for even or non-positive N.
FermionConfig balanced_config(int n_particles);

/// Rigid shift m_i -> m_i + shift of every orbital.
FermionConfig boosted_config(const FermionConfig& cfg, int shift);

/// chi_c = g_eff (W_pol - W_bal) / M_pol^2. Throws DomainError when M_pol = 0.
double critical_chi(double g_eff, std::int64_t w_pol, std::int64_t w_bal, std::int64_t m_pol);

/// phi_c = sqrt(g_eff hbar omega / (4 g N (g - g_eff))).
/// Throws NoTransitionError unless g > g_eff.
double critical_flux(const ModelParams& p);

/// |M| of the minimum-kinetic-energy configurations: 0 for odd N, N/2 for even N.
/// A ground state is labelled balanced iff its |M| equals this value.
std::int64_t balanced_abs_m(int n_particles);

/// Exhaustive minimisation of g_eff W - chi M^2 over all sets of N distinct
/// orbitals with |m_i| <= m_max. Ties go to smaller |M|, then to the
/// lexicographically smallest orbital list. The result does not depend on
/// `jobs`.
GroundState ground_state_search(const ModelParams& p, int m_max, int jobs = 1);

/// Number of configurations ground_state_search visits.
std::uint64_t search_space_size(int n_particles, int m_max);

/// First index pair (i-1, i) where the phase changes along a scan, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_phase_change(std::span<const Phase> phases);

}  // namespace fluxqm
