#include "fluxqm/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "fluxqm/errors.hpp"
#include "fluxqm/simd/kernels.hpp"

namespace fluxqm {

double HermitianMatrix::hermiticity_defect() const {
    return (data - data.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

std::vector<double> take_levels(const Eigen::VectorXd& values, int n_levels) {
    const int n = n_levels < 0 ? static_cast<int>(values.size())
                               : std::min<int>(n_levels, static_cast<int>(values.size()));
    return {values.data(), values.data() + n};
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& h, int n_levels) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ConvergenceError("symmetric eigensolver failed", NAN);
    return take_levels(solver.eigenvalues(), n_levels);
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& h, int n_levels) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.data, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ConvergenceError("hermitian eigensolver failed", NAN);
    return take_levels(solver.eigenvalues(), n_levels);
}

SymmetricEigenpairs symmetric_eigenpairs(const Eigen::MatrixXd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) throw ConvergenceError("symmetric eigensolver failed", NAN);
    return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<double> tridiagonal_lowest_eigenvalues(const SymmetricTridiagonal& t, int count) {
    const std::size_t n = t.diag.size();
    if (n == 0 || t.off.size() + 1 != n) throw UsageError("tridiagonal: off-diagonal must have n-1 entries");
    if (count < 1 || static_cast<std::size_t>(count) > n) throw UsageError("tridiagonal: bad eigenvalue count");

    std::vector<double> off_sq(n - 1);
    double max_off_sq = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        const double left = i > 0 ? std::fabs(t.off[i - 1]) : 0.0;
        const double right = i + 1 < n ? std::fabs(t.off[i]) : 0.0;
        lo = std::min(lo, t.diag[i] - left - right);
        hi = std::max(hi, t.diag[i] + left + right);
        if (i + 1 < n) {
            off_sq[i] = t.off[i] * t.off[i];
            max_off_sq = std::max(max_off_sq, off_sq[i]);
        }
    }
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, max_off_sq);
    const double span = std::max(hi - lo, 1.0);
    lo -= 1e-12 * span;
    hi += 1e-12 * span;

    std::vector<double> lower(count, lo), upper(count, hi);
    auto converged = [&](int k) {
        const double mid = 0.5 * (lower[k] + upper[k]);
        const double scale = std::max(std::fabs(lower[k]), std::fabs(upper[k]));
        return upper[k] - lower[k] <= 4.0 * std::numeric_limits<double>::epsilon() * scale + pivmin ||
               mid <= lower[k] || mid >= upper[k];
    };

    std::array<double, simd::kSturmLanes> shifts{};
    std::array<int, simd::kSturmLanes> counts{};
    for (int sweep = 0; sweep < 400; ++sweep) {
        std::size_t used = 0;
        for (int k = 0; k < count && used < simd::kSturmLanes; ++k) {
            if (!converged(k)) shifts[used++] = 0.5 * (lower[k] + upper[k]);
        }
        if (used == 0) break;
        for (std::size_t lane = used; lane < simd::kSturmLanes; ++lane) shifts[lane] = shifts[0];
        simd::sturm_counts(t.diag, off_sq, shifts, pivmin, counts);
        // Every probe tightens every bracket it informs.
        for (std::size_t lane = 0; lane < used; ++lane) {
            for (int k = 0; k < count; ++k) {
                if (counts[lane] >= k + 1) {
                    upper[k] = std::min(upper[k], shifts[lane]);
                } else {
                    lower[k] = std::max(lower[k], shifts[lane]);
                }
            }
        }
    }
    std::vector<double> values(count);
    for (int k = 0; k < count; ++k) values[k] = 0.5 * (lower[k] + upper[k]);
    return values;
}

std::vector<double> tridiagonal_eigenvector(const SymmetricTridiagonal& t, double eigenvalue) {
    const std::size_t n = t.diag.size();
    double scale = 0.0;
    for (double d : t.diag) scale = std::max(scale, std::fabs(d));
    for (double e : t.off) scale = std::max(scale, std::fabs(e));
    const double shift = eigenvalue + 1e-10 * std::max(scale, 1.0);

    // LU with partial pivoting of (T - shift), LAPACK gttrf layout.
    std::vector<double> dl(t.off), d(n), du(t.off), du2(n > 2 ? n - 2 : 0, 0.0);
    std::vector<int> swapped(n, 0);
    for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - shift;
    const double tiny = std::numeric_limits<double>::min() * 16;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::fabs(d[i]) >= std::fabs(dl[i])) {
            if (std::fabs(d[i]) < tiny) d[i] = tiny;
            const double f = dl[i] / d[i];
            dl[i] = f;
            d[i + 1] -= f * du[i];
        } else {
            const double f = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = f;
            const double tmp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = tmp - f * d[i + 1];
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -f * du[i + 1];
            }
            swapped[i] = 1;
        }
    }
    if (std::fabs(d[n - 1]) < tiny) d[n - 1] = tiny;

    auto solve = [&](std::vector<double>& b) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (swapped[i]) std::swap(b[i], b[i + 1]);
            b[i + 1] -= dl[i] * b[i];
        }
        b[n - 1] /= d[n - 1];
        if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
        for (std::size_t ii = n >= 2 ? n - 2 : 0; ii-- > 0;) {
            b[ii] = (b[ii] - du[ii] * b[ii + 1] - du2[ii] * b[ii + 2]) / d[ii];
        }
    };
    auto normalize = [](std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x * x;
        s = std::sqrt(s);
        for (double& x : v) x /= s;
    };

    std::vector<double> v(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) v[i] += 1e-3 * static_cast<double>(i % 7);
    normalize(v);
    for (int it = 0; it < 4; ++it) {
        solve(v);
        normalize(v);
    }
    // Fix the sign so the largest component is positive.
    const auto big = std::max_element(v.begin(), v.end(), [](double a, double b) { return std::fabs(a) < std::fabs(b); });
    if (*big < 0) {
        for (double& x : v) x = -x;
    }
    return v;
}

}  // namespace fluxqm
