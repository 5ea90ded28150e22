#include "fluxqm/synthetic_jj.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fluxqm/errors.hpp"

namespace fluxqm {

TBSector sector_constants(std::span<const int> occupied, int m_sites) {
    if (m_sites < 1) throw DomainError("sector_constants: ring needs at least one site");
    std::vector<int> occ(occupied.begin(), occupied.end());
    std::sort(occ.begin(), occ.end());
    if (std::adjacent_find(occ.begin(), occ.end()) != occ.end()) {
        throw PauliError("sector_constants: momentum index occupied twice");
    }
    TBSector s;
    s.m_sites = m_sites;
    for (int n : occ) {
        if (n < 0 || n >= m_sites) throw DomainError("sector_constants: momentum index out of range");
        const double ka = 2.0 * std::numbers::pi * n / m_sites;
        s.c_sum += std::cos(ka);
        s.s_sum += std::sin(ka);
    }
    s.occupations = std::move(occ);
    s.e_j_amp = std::hypot(s.c_sum, s.s_sum);
    s.delta = std::atan2(s.s_sum, s.c_sum);
    return s;
}

TBSector sector_from_sums(double c_sum, double s_sum) {
    TBSector s;
    s.c_sum = c_sum;
    s.s_sum = s_sum;
    s.e_j_amp = std::hypot(c_sum, s_sum);
    s.delta = std::atan2(s_sum, c_sum);
    return s;
}

double peierls_eta(double flux_quanta, int m_sites) {
    if (m_sites < 1) throw DomainError("peierls_eta: ring needs at least one site");
    return 2.0 * std::numbers::pi / m_sites * flux_quanta;
}

double laguerre(int n, int alpha, double x) {
    if (n < 0) throw DomainError("laguerre: negative degree");
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

// G_j = e^{-x/2} lambda^k sqrt(j!/(j+k)!) L_j^(k)(x), x = lambda^2, j = 0..count-1.
// The normalised three-term recursion keeps every term O(1).
std::vector<double> scaled_laguerre_column(int k, double lambda, int count) {
    std::vector<double> g(count, 0.0);
    if (count == 0) return g;
    const double x = lambda * lambda;
    if (lambda == 0.0) {
        if (k == 0) std::fill(g.begin(), g.end(), 1.0);
        return g;
    }
    g[0] = std::exp(-0.5 * x + k * std::log(std::fabs(lambda)) - 0.5 * std::lgamma(k + 1.0));
    if (lambda < 0.0 && k % 2 == 1) g[0] = -g[0];
    if (count > 1) g[1] = g[0] * (1.0 + k - x) / std::sqrt(k + 1.0);
    for (int j = 1; j + 1 < count; ++j) {
        const double a = (2.0 * j + 1.0 + k - x) * std::sqrt((j + 1.0) / (j + 1.0 + k));
        const double b = (j + k) * std::sqrt(j * (j + 1.0) / ((j + k) * (j + 1.0 + k)));
        g[j + 1] = (a * g[j] - b * g[j - 1]) / (j + 1.0);
    }
    return g;
}

std::complex<double> i_power(int k, int sign) {
    static const std::complex<double> cycle[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const int r = ((sign > 0 ? k : -k) % 4 + 4) % 4;
    return cycle[r];
}

}  // namespace

std::complex<double> displacement_matrix_element(int m, int n, double lambda, int sign) {
    if (m < 0 || n < 0) throw DomainError("displacement_matrix_element: negative Fock index");
    if (sign != 1 && sign != -1) throw DomainError("displacement_matrix_element: sign must be +1 or -1");
    const int k = std::abs(m - n);
    const int lo = std::min(m, n);
    const auto g = scaled_laguerre_column(k, lambda, lo + 1);
    return i_power(k, sign) * g[lo];
}

Eigen::MatrixXcd displacement_matrix(double lambda, int sign, int cutoff) {
    if (sign != 1 && sign != -1) throw DomainError("displacement_matrix: sign must be +1 or -1");
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(cutoff, cutoff);
    for (int k = 0; k < cutoff; ++k) {
        const auto g = scaled_laguerre_column(k, lambda, cutoff - k);
        const auto phase = i_power(k, sign);
        for (int j = 0; j + k < cutoff; ++j) {
            d(j + k, j) = phase * g[j];
            d(j, j + k) = phase * g[j];
        }
    }
    return d;
}

HermitianMatrix sector_hamiltonian_fock(const TBSector& sector, double t, double eta, double hbar_omega,
                                        int cutoff) {
    const double lambda = eta / std::sqrt(2.0);
    const Eigen::MatrixXcd plus = displacement_matrix(lambda, +1, cutoff);
    const Eigen::MatrixXcd minus = displacement_matrix(lambda, -1, cutoff);
    const std::complex<double> i(0.0, 1.0);
    const Eigen::MatrixXcd cos_op = 0.5 * (plus + minus);
    const Eigen::MatrixXcd sin_op = (plus - minus) / (2.0 * i);
    Eigen::MatrixXcd h = -2.0 * t * (sector.c_sum * cos_op - sector.s_sum * sin_op);
    for (int k = 0; k < cutoff; ++k) h(k, k) += hbar_omega * k;
    HermitianMatrix out;
    out.data = 0.5 * (h + h.adjoint());
    out.cutoff = cutoff;
    return out;
}

FockLevels sector_spectrum_fock(const TBSector& sector, double t, double eta, double hbar_omega, int cutoff,
                                int n_levels) {
    if (n_levels < 1 || cutoff < 4 * n_levels) throw DomainError("sector_spectrum_fock: cutoff must be >= 4 n_levels");
    if (!(hbar_omega > 0.0)) throw DomainError("sector_spectrum_fock: hbar_omega must be positive");
    auto levels_at = [&](int size) {
        return hermitian_eigenvalues(sector_hamiltonian_fock(sector, t, eta, hbar_omega, size), n_levels);
    };
    FockLevels out;
    int size = cutoff;
    std::vector<double> current = levels_at(size);
    double change = 0.0;
    for (int doubling = 0; doubling < 3; ++doubling) {
        const auto wider = levels_at(2 * size);
        change = 0.0;
        for (int i = 0; i < n_levels; ++i) {
            change = std::max(change, std::fabs(wider[i] - current[i]) / std::max(std::fabs(wider[i]), 1.0));
        }
        current = wider;
        size *= 2;
        if (change < 1e-9) {
            out.levels = std::move(current);
            out.cutoff_used = size;
            out.convergence_change = change;
            return out;
        }
    }
    throw ConvergenceError("sector_spectrum_fock: cutoff doubling did not converge", change);
}

BoundStates sector_spectrum_xrep(const TBSector& sector, double t, double eta, double hbar_omega,
                                 const Grid1D& grid, int n_levels) {
    if (!(hbar_omega > 0.0)) throw DomainError("sector_spectrum_xrep: hbar_omega must be positive");
    const double c = sector.c_sum, s = sector.s_sum;
    auto potential = [=](double x) {
        return 0.5 * hbar_omega * x * x - 2.0 * t * (c * std::cos(eta * x) - s * std::sin(eta * x));
    };
    return solve_bound_states(0.5 * hbar_omega, potential, grid, n_levels);
}

RfSquidParams rf_squid_map(const TBSector& sector, double t, double eta, double hbar_omega) {
    if (eta == 0.0) throw DomainError("rf_squid_map: eta = 0 makes E_L singular");
    RfSquidParams r{};
    r.e_j = 2.0 * t * sector.e_j_amp;
    r.phi_ext = sector.delta;
    r.e_l = hbar_omega / (eta * eta);
    r.e_c = hbar_omega * eta * eta / 8.0;
    r.beta_ratio = r.e_j / r.e_l;
    return r;
}

BoundStates rf_squid_spectrum(const RfSquidParams& params, const Grid1D& phase_grid, int n_levels) {
    const RfSquidParams q = params;
    auto potential = [q](double phase) {
        const double d = phase - q.phi_ext;
        return 0.5 * q.e_l * d * d - q.e_j * std::cos(phase);
    };
    return solve_bound_states(4.0 * q.e_c, potential, phase_grid, n_levels);
}

Grid1D phase_grid_for(const RfSquidParams& params, double eta, const Grid1D& x_grid) {
    const double a = params.phi_ext + eta * x_grid.x_min;
    const double b = params.phi_ext + eta * x_grid.x_max;
    return {std::min(a, b), std::max(a, b), x_grid.n_points};
}

double tunnel_splitting(std::span<const double> levels) {
    if (levels.size() < 2) throw DomainError("tunnel_splitting: need two levels");
    return levels[1] - levels[0];
}

}  // namespace fluxqm
