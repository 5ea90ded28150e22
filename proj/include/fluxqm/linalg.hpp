#pragma once

#include <Eigen/Dense>
#include <vector>

namespace fluxqm {

/// Dense complex Hermitian operator on a truncated oscillator basis
/// |0>, ..., |cutoff-1>.
struct HermitianMatrix {
    Eigen::MatrixXcd data;
    int cutoff = 0;

    /// Largest |H - H^dagger| entry.
    double hermiticity_defect() const;
};

/// Ascending eigenvalues of a real symmetric matrix, truncated to n_levels
/// (all when n_levels < 0).
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& h, int n_levels = -1);

/// Ascending eigenvalues of a Hermitian matrix, truncated to n_levels.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& h, int n_levels = -1);

struct SymmetricEigenpairs {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;  // columns
};

SymmetricEigenpairs symmetric_eigenpairs(const Eigen::MatrixXd& h);

/// Symmetric tridiagonal matrix: diag (n) and off-diagonal (n-1).
struct SymmetricTridiagonal {
    std::vector<double> diag;
    std::vector<double> off;
};

/// The `count` smallest eigenvalues by Sturm bisection, ascending. Bisection
/// runs on several eigenvalues at once through the simd::sturm_counts kernel.
std::vector<double> tridiagonal_lowest_eigenvalues(const SymmetricTridiagonal& t, int count);

/// Unit eigenvector for a (converged) eigenvalue, by inverse iteration.
std::vector<double> tridiagonal_eigenvector(const SymmetricTridiagonal& t, double eigenvalue);

}  // namespace fluxqm
