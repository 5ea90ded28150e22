#include <doctest.h>

#include <cmath>

#include "fluxqm/errors.hpp"
#include "fluxqm/linalg.hpp"
#include "fluxqm/simd/kernels.hpp"
#include "test_support.hpp"

using namespace fluxqm;

namespace {

SymmetricTridiagonal random_tridiagonal(int n) {
    SymmetricTridiagonal t;
    t.diag.resize(n);
    t.off.resize(n - 1);
    for (auto& d : t.diag) d = testing::uniform(-3, 3);
    for (auto& e : t.off) e = testing::uniform(-1, 1);
    return t;
}

Eigen::MatrixXd dense(const SymmetricTridiagonal& t) {
    const int n = static_cast<int>(t.diag.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = t.diag[i];
    for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = t.off[i];
    return m;
}

}  // namespace

TEST_CASE("tridiagonal bisection agrees with the dense solver") {
    for (auto isa : {simd::Isa::scalar, simd::Isa::avx2}) {
        simd::force_isa(isa);
        for (int trial = 0; trial < 20; ++trial) {
            const int n = testing::uniform_int(2, 120);
            const auto t = random_tridiagonal(n);
            const int k = std::min(n, 6);
            const auto bis = tridiagonal_lowest_eigenvalues(t, k);
            const auto ref = symmetric_eigenvalues(dense(t), k);
            for (int i = 0; i < k; ++i) REQUIRE(std::fabs(bis[i] - ref[i]) < 1e-12);
        }
    }
    simd::force_isa(simd::avx2_supported() ? simd::Isa::avx2 : simd::Isa::scalar);
}

TEST_CASE("inverse iteration returns a unit eigenvector") {
    const auto t = random_tridiagonal(80);
    const auto values = tridiagonal_lowest_eigenvalues(t, 3);
    const Eigen::MatrixXd m = dense(t);
    for (double lambda : values) {
        const auto v = tridiagonal_eigenvector(t, lambda);
        const Eigen::Map<const Eigen::VectorXd> ev(v.data(), static_cast<Eigen::Index>(v.size()));
        CHECK(ev.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((m * ev - lambda * ev).norm() < 1e-8);
    }
}

TEST_CASE("tridiagonal input validation") {
    SymmetricTridiagonal bad{{1.0, 2.0}, {}};
    CHECK_THROWS_AS(tridiagonal_lowest_eigenvalues(bad, 1), UsageError);
    SymmetricTridiagonal ok{{1.0, 2.0}, {0.5}};
    CHECK_THROWS_AS(tridiagonal_lowest_eigenvalues(ok, 3), UsageError);
}

TEST_CASE("hermitian eigenvalues of a known 2x2") {
    HermitianMatrix h;
    h.cutoff = 2;
    h.data.resize(2, 2);
    h.data << 1.0, std::complex<double>(0, 1), std::complex<double>(0, -1), 1.0;
    CHECK(h.hermiticity_defect() == 0.0);
    const auto e = hermitian_eigenvalues(h);
    CHECK(e[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(e[1] == doctest::Approx(2.0));
}
