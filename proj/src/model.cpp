#include "fluxqm/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fluxqm/errors.hpp"

namespace fluxqm {

LCParams derive_lc(double inductance, double capacitance) {
    if (!(inductance > 0.0) || !(capacitance > 0.0)) {
        throw DomainError("derive_lc: inductance and capacitance must be positive");
    }
    LCParams lc{};
    lc.inductance = inductance;
    lc.capacitance = capacitance;
    lc.omega = 1.0 / std::sqrt(inductance * capacitance);
    lc.impedance = std::sqrt(inductance / capacitance);
    lc.phi_zpf = std::sqrt(si::hbar * lc.impedance / 2.0);
    lc.q_zpf = std::sqrt(si::hbar / (2.0 * lc.impedance));
    return lc;
}

RingScales derive_ring(double radius, double m_eff_ratio, double energy_unit) {
    if (!(radius > 0.0) || !(m_eff_ratio > 0.0) || !(energy_unit > 0.0)) {
        throw DomainError("derive_ring: radius, mass ratio and energy unit must be positive");
    }
    const double g = si::hbar * si::hbar / (2.0 * si::electron_mass * radius * radius) / energy_unit;
    return {g, g / m_eff_ratio};
}

void ModelParams::validate() const {
    if (!(g > 0.0)) throw DomainError("ModelParams: g must be positive");
    if (!(g_eff > 0.0)) throw DomainError("ModelParams: g_eff must be positive");
    if (!(hbar_omega > 0.0)) throw DomainError("ModelParams: hbar_omega must be positive");
    if (!(phi >= 0.0)) throw DomainError("ModelParams: phi must be non-negative");
    if (n_particles < 1) throw DomainError("ModelParams: n_particles must be >= 1");
    if (!std::isfinite(eta)) throw DomainError("ModelParams: eta must be finite");
}

FermionConfig::FermionConfig(std::vector<int> orbitals) : orbitals_(std::move(orbitals)) {
    std::sort(orbitals_.begin(), orbitals_.end());
    if (std::adjacent_find(orbitals_.begin(), orbitals_.end()) != orbitals_.end()) {
        throw PauliError("FermionConfig: repeated orbital in spinless configuration");
    }
    recompute();
}

FermionConfig::FermionConfig(std::vector<int> orbitals, std::vector<int> spins) {
    if (orbitals.size() != spins.size()) {
        throw UsageError("FermionConfig: orbitals and spins differ in length");
    }
    std::vector<std::pair<int, int>> states(orbitals.size());
    for (std::size_t i = 0; i < orbitals.size(); ++i) {
        if (spins[i] != 1 && spins[i] != -1) throw DomainError("FermionConfig: spin must be +1 or -1");
        states[i] = {orbitals[i], spins[i]};
    }
    std::sort(states.begin(), states.end());
    if (std::adjacent_find(states.begin(), states.end()) != states.end()) {
        throw PauliError("FermionConfig: repeated (orbital, spin) state");
    }
    orbitals_.reserve(states.size());
    spins_.reserve(states.size());
    for (const auto& [m, s] : states) {
        orbitals_.push_back(m);
        spins_.push_back(s);
    }
    recompute();
}

std::optional<std::span<const int>> FermionConfig::spins() const {
    if (spins_.empty()) return std::nullopt;
    return std::span<const int>(spins_);
}

void FermionConfig::recompute() {
    m_total_ = 0;
    w_kinetic_ = 0;
    for (int m : orbitals_) {
        m_total_ += m;
        w_kinetic_ += static_cast<std::int64_t>(m) * m;
    }
    sigma_total_ = std::accumulate(spins_.begin(), spins_.end(), std::int64_t{0});
}

bool FermionConfig::consistent() const {
    std::int64_t m = 0, w = 0, s = 0;
    for (int x : orbitals_) {
        m += x;
        w += static_cast<std::int64_t>(x) * x;
    }
    for (int x : spins_) s += x;
    return m == m_total_ && w == w_kinetic_ && s == sigma_total_;
}

std::string FermionConfig::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < orbitals_.size(); ++i) {
        if (i) os << ';';
        os << orbitals_[i];
        if (!spins_.empty()) os << (spins_[i] > 0 ? "u" : "d");
    }
    return os.str();
}

}  // namespace fluxqm
