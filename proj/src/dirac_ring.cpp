#include "fluxqm/dirac_ring.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fluxqm/errors.hpp"

namespace fluxqm {

void DiracParams::validate() const {
    if (!(eps0 > 0.0)) throw DomainError("DiracParams: eps0 must be positive");
    if (g_d != 1 && g_d != 2 && g_d != 4) throw DomainError("DiracParams: g_d must be 1, 2 or 4");
    if (!(d_eff >= 0.0)) throw DomainError("DiracParams: d_eff must be non-negative");
    if (!(hbar_omega > 0.0)) throw DomainError("DiracParams: hbar_omega must be positive");
    if (n_electrons < 0) throw DomainError("DiracParams: n_electrons must be non-negative");
}

ChiralSector ChiralSector::from_chirality(int n_electrons, int j) {
    if (std::abs(j) > n_electrons || (n_electrons - j) % 2 != 0) {
        throw DomainError("ChiralSector: chirality incompatible with electron number");
    }
    return {(n_electrons + j) / 2, (n_electrons - j) / 2};
}

double diamagnetic_stiffness(double eps0, double filling, int n_sites, double phi, bool spinful) {
    if (!(filling > 0.0 && filling < 1.0)) throw DomainError("diamagnetic_stiffness: filling must lie in (0, 1)");
    if (n_sites < 2) throw DomainError("diamagnetic_stiffness: need at least two sites");
    const double d = eps0 * (2.0 / std::numbers::pi) * (phi * phi / n_sites) * std::sin(std::numbers::pi * filling);
    return spinful ? 2.0 * d : d;
}

double diamagnetic_stiffness_band_sum(double eps0, double filling, int n_sites, double phi) {
    if (!(filling > 0.0 && filling < 1.0)) throw DomainError("diamagnetic_stiffness_band_sum: filling must lie in (0, 1)");
    if (n_sites < 2) throw DomainError("diamagnetic_stiffness_band_sum: need at least two sites");
    const int n = static_cast<int>(std::lround(filling * n_sites));
    std::vector<double> levels(n_sites);
    for (int k = 0; k < n_sites; ++k) levels[k] = -2.0 * eps0 * std::cos(2.0 * std::numbers::pi * k / n_sites);
    std::sort(levels.begin(), levels.end());
    double h0 = 0.0;
    for (int i = 0; i < n; ++i) h0 += levels[i];
    const double ratio = phi / n_sites;
    return -ratio * ratio * h0;
}

double induced_coupling_dirac(const DiracParams& p) {
    p.validate();
    const double lam = p.lambda();
    return lam * lam / (p.hbar_omega + 2.0 * p.d_eff * p.phi * p.phi);
}

double effective_energy(int j, const DiracParams& p, double chi) {
    if (std::abs(j) > p.n_electrons) throw DomainError("effective_energy: |j| exceeds N");
    const double stiff = p.eps0 / (4.0 * p.g_d);
    const double n = p.n_electrons;
    return stiff * n * n + (stiff - chi) * static_cast<double>(j) * j;
}

double filled_branch_energy(const ChiralSector& sector, const DiracParams& p) {
    p.validate();
    if (sector.n_plus < 0 || sector.n_minus < 0) throw DomainError("filled_branch_energy: negative occupation");
    // + branch: m = 0, 1, ... with |m + beta| = m + beta;
    // - branch: m = -1, -2, ... with |m + beta| = |m| - beta.
    auto branch = [&](int count, bool plus) {
        double e = 0.0;
        for (int i = 0; i < count; ++i) {
            const int level = i / p.g_d;
            e += plus ? level + p.beta_berry : level + 1 - p.beta_berry;
        }
        return p.eps0 * e;
    };
    return branch(sector.n_plus, true) + branch(sector.n_minus, false);
}

double critical_chi_dirac(const DiracParams& p) {
    p.validate();
    return p.eps0 / (4.0 * p.g_d);
}

double critical_flux_dirac(const DiracParams& p) {
    p.validate();
    const double denom = 4.0 * p.g_d * p.eps0 - 2.0 * p.d_eff;
    if (!(denom > 0.0)) throw NoTransitionError("critical_flux_dirac: requires 4 g_d eps0 > 2 D_eff");
    return std::sqrt(p.hbar_omega / denom);
}

FluxDisplacement flux_displacement(int j, const DiracParams& p) {
    p.validate();
    const double a = -p.lambda() * j / (p.hbar_omega + 2.0 * p.phi * p.phi * p.d_eff);
    return {a, a * a};
}

std::vector<int> admissible_chiralities(int n_electrons, int j_max) {
    std::vector<int> js;
    const int bound = std::min(j_max, n_electrons);
    for (int j = -bound; j <= bound; ++j) {
        if ((n_electrons - j) % 2 == 0) js.push_back(j);
    }
    return js;
}

int chirality_argmin(const DiracParams& p, double chi, int j_max) {
    p.validate();
    const auto js = admissible_chiralities(p.n_electrons, j_max < 0 ? p.n_electrons : j_max);
    if (js.empty()) throw DomainError("chirality_argmin: no admissible chirality");
    int best = js.front();
    double best_e = effective_energy(best, p, chi);
    for (int j : js) {
        const double e = effective_energy(j, p, chi);
        const bool tie_wins = e == best_e && (std::abs(j) < std::abs(best) || (std::abs(j) == std::abs(best) && j > best));
        if (e < best_e || tie_wins) {
            best = j;
            best_e = e;
        }
    }
    return best;
}

}  // namespace fluxqm
