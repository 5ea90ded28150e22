#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fluxqm {

namespace si {
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
}  // namespace si

/// Quantized lumped LC resonator. All fields in SI units.
struct LCParams {
    double inductance;   // H
    double capacitance;  // F
    double omega;        // rad/s
    double impedance;    // ohm
    double phi_zpf;      // Wb
    double q_zpf;        // C
};

/// Derives the resonator frequency, impedance and zero-point amplitudes.
/// Throws DomainError unless L > 0 and C > 0.
LCParams derive_lc(double inductance, double capacitance);

struct RingScales {
    double g;      // hbar^2 / (2 m0 R^2) in units of energy_unit
    double g_eff;  // hbar^2 / (2 m_eff R^2) in units of energy_unit
};

/// Orbital energy scales of a ring of radius `radius` (m) for carriers of
/// mass m_eff = m_eff_ratio * m0, expressed in `energy_unit` joules.
RingScales derive_ring(double radius, double m_eff_ratio, double energy_unit);

/// Dimensionless couplings of the projected ring-cavity Hamiltonian
///   g_eff sum L_i^2 + hbar_omega a^+a + g N phi^2 X^2 - X (2 g phi M + eta Sigma),
/// with X = a + a^+. Energies are in units of E0 (by default E0 = hbar omega).
struct ModelParams {
    double g = 1.0;
    double g_eff = 1.0;
    double phi = 0.0;
    int n_particles = 1;
    double hbar_omega = 1.0;
    double eta = 0.0;

    /// Throws DomainError if any invariant is violated.
    void validate() const;

    /// 4 g N phi^2 + hbar_omega: the diamagnetically stiffened mode energy.
    double stiffened_energy() const { return 4.0 * g * n_particles * phi * phi + hbar_omega; }
};

/// Occupation set {m_i} (optionally with spins s_i = +-1) of N fermions.
///
/// Orbitals are kept sorted (by (m, s) for spinful sets). Duplicates are
/// rejected at construction, so Pauli exclusion holds for every instance.
class FermionConfig {
public:
    explicit FermionConfig(std::vector<int> orbitals);
    FermionConfig(std::vector<int> orbitals, std::vector<int> spins);

    std::span<const int> orbitals() const { return orbitals_; }
    std::optional<std::span<const int>> spins() const;
    bool has_spins() const { return !spins_.empty(); }
    int size() const { return static_cast<int>(orbitals_.size()); }

    std::int64_t m_total() const { return m_total_; }
    std::int64_t sigma_total() const { return sigma_total_; }
    std::int64_t w_kinetic() const { return w_kinetic_; }

    /// Returns true when the cached sums agree with a recomputation.
    bool consistent() const;

    std::string to_string() const;

    friend bool operator==(const FermionConfig&, const FermionConfig&) = default;

private:
    void recompute();

    std::vector<int> orbitals_;
    std::vector<int> spins_;
    std::int64_t m_total_ = 0;
    std::int64_t sigma_total_ = 0;
    std::int64_t w_kinetic_ = 0;
};

}  // namespace fluxqm
