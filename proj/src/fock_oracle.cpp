#include "fluxqm/fock_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "fluxqm/errors.hpp"
#include "fluxqm/linalg.hpp"

namespace fluxqm {

Eigen::MatrixXd oracle_hamiltonian(const ModelParams& p, const FermionConfig& cfg, int cutoff) {
    p.validate();
    if (cutoff < 2) throw DomainError("oracle: cutoff must be at least 2");
    const double w = static_cast<double>(cfg.w_kinetic());
    const double m = static_cast<double>(cfg.m_total());
    const double sigma = static_cast<double>(cfg.sigma_total());
    const double quad = p.g * p.n_particles * p.phi * p.phi;  // X^2 coefficient
    const double drive = 2.0 * p.g * p.phi * m + p.eta * sigma;  // -X coefficient

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(cutoff, cutoff);
    for (int k = 0; k < cutoff; ++k) {
        // <k|X^2|k> = 2k + 1
        h(k, k) = p.g_eff * w + p.hbar_omega * k + quad * (2.0 * k + 1.0);
        if (k + 1 < cutoff) {
            // <k|X|k+1> = sqrt(k+1)
            const double x = std::sqrt(k + 1.0);
            h(k, k + 1) = -drive * x;
            h(k + 1, k) = -drive * x;
        }
        if (k + 2 < cutoff) {
            // <k|X^2|k+2> = sqrt((k+1)(k+2))
            const double x2 = std::sqrt((k + 1.0) * (k + 2.0));
            h(k, k + 2) = quad * x2;
            h(k + 2, k) = quad * x2;
        }
    }
    const double asym = (h - h.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12) throw Error("oracle: assembled Hamiltonian is not symmetric");
    return h;
}

OracleReport oracle_spectrum(const ModelParams& p, const FermionConfig& cfg, int cutoff, int n_levels,
                             const OracleOptions& options) {
    if (cutoff < 50) throw DomainError("oracle: cutoff must be at least 50");
    if (n_levels < 1 || n_levels > cutoff) throw DomainError("oracle: bad level count");
    OracleReport report;
    report.cutoff_used = cutoff;
    report.levels = symmetric_eigenvalues(oracle_hamiltonian(p, cfg, cutoff), n_levels);
    if (options.check_convergence) {
        const auto wider = symmetric_eigenvalues(oracle_hamiltonian(p, cfg, 2 * cutoff), n_levels);
        double change = 0.0;
        for (int i = 0; i < n_levels; ++i) {
            change = std::max(change, std::fabs(wider[i] - report.levels[i]) /
                                          std::max(std::fabs(wider[i]), 1.0));
        }
        report.convergence_change = change;
        report.converged = change < options.convergence_tol;
    }
    return report;
}

OracleGroundState oracle_ground_state(const ModelParams& p, const FermionConfig& cfg, int cutoff) {
    const auto pairs = symmetric_eigenpairs(oracle_hamiltonian(p, cfg, cutoff));
    const Eigen::VectorXd v = pairs.vectors.col(0);
    double a = 0.0, x2 = 0.0, p2 = 0.0;
    for (int k = 0; k < cutoff; ++k) {
        // x^2 = (2k+1)/2 on the diagonal, sqrt((k+1)(k+2))/2 two off;
        // p^2 has the same diagonal and the opposite off-diagonal sign.
        x2 += v[k] * v[k] * (2.0 * k + 1.0) / 2.0;
        p2 += v[k] * v[k] * (2.0 * k + 1.0) / 2.0;
        if (k + 1 < cutoff) a += v[k] * v[k + 1] * std::sqrt(k + 1.0);
        if (k + 2 < cutoff) {
            const double off = v[k] * v[k + 2] * std::sqrt((k + 1.0) * (k + 2.0));
            x2 += off;
            p2 -= off;
        }
    }
    const double x_mean = std::sqrt(2.0) * a;
    return {pairs.values[0], a, x_mean, x2 - x_mean * x_mean, p2};
}

ComparisonReport compare_spectra(std::span<const double> candidate, std::span<const double> reference,
                                 double tol, CompareMode mode, double scale_floor) {
    if (candidate.size() != reference.size()) throw UsageError("compare_spectra: length mismatch");
    ComparisonReport r;
    r.tolerance = tol;
    const std::size_t n = candidate.size();
    if (mode == CompareMode::constant_offset && n > 0) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += reference[i] - candidate[i];
        r.fitted_offset = sum / static_cast<double>(n);
    }
    r.relative_errors.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double diff = std::fabs(candidate[i] + r.fitted_offset - reference[i]);
        r.relative_errors[i] = diff / std::max(std::fabs(reference[i]), scale_floor);
        if (r.relative_errors[i] > r.max_relative_error) {
            r.max_relative_error = r.relative_errors[i];
            r.argmax = i;
        }
    }
    r.pass = r.max_relative_error <= tol;
    return r;
}

void attach_comparison(OracleReport& report, std::span<const double> analytic, double scale_floor) {
    const auto cmp = compare_spectra(analytic, report.levels, 0.0, CompareMode::absolute_levels, scale_floor);
    report.relative_errors = cmp.relative_errors;
    report.max_abs_residual = 0.0;
    for (std::size_t i = 0; i < analytic.size(); ++i) {
        report.max_abs_residual = std::max(report.max_abs_residual, std::fabs(analytic[i] - report.levels[i]));
    }
}

}  // namespace fluxqm
