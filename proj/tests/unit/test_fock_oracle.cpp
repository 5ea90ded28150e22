#include <doctest.h>

#include <cmath>

#include "fluxqm/errors.hpp"
#include "fluxqm/fock_oracle.hpp"
#include "test_support.hpp"

using namespace fluxqm;

TEST_CASE("decoupled oracle is the bare ladder") {
    ModelParams p;
    p.g_eff = 0.3;
    p.hbar_omega = 1.7;
    p.n_particles = 2;
    const FermionConfig cfg({-2, 1});
    const auto r = oracle_spectrum(p, cfg, 60, 8);
    CHECK(r.converged);
    for (int n = 0; n < 8; ++n) CHECK(r.levels[n] == doctest::Approx(0.3 * 5 + 1.7 * n).epsilon(1e-14));
}

TEST_CASE("assembled matrix is symmetric") {
    ModelParams p;
    p.phi = 1.3;
    p.g = 0.7;
    p.eta = 0.4;
    p.n_particles = 2;
    const Eigen::MatrixXd h = oracle_hamiltonian(p, FermionConfig({0, 1}, {1, 1}), 120);
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Zeeman sector: M = 0, Sigma = N, phi = 0") {
    ModelParams p;
    p.n_particles = 2;
    p.eta = 0.3;
    p.g_eff = 0.8;
    const FermionConfig cfg({-1, 1}, {1, 1});
    const auto r = oracle_spectrum(p, cfg, 200, 3);
    // g_eff W - eta^2 N^2 / hbar omega + hbar omega n, in the a^+a convention.
    for (int n = 0; n < 3; ++n) CHECK(r.levels[n] == doctest::Approx(0.8 * 2 - 0.09 * 4 + n).epsilon(1e-12));
}

TEST_CASE("ground level is non-increasing in the cutoff") {
    ModelParams p;
    p.g = 1.2;
    p.g_eff = 0.4;
    p.phi = 1.5;
    p.n_particles = 3;
    const FermionConfig cfg({0, 1, 2});
    double previous = INFINITY;
    for (int cutoff = 50; cutoff <= 200; cutoff += 25) {
        const double e = oracle_spectrum(p, cfg, cutoff, 1, {false}).levels[0];
        CHECK(e <= previous + 1e-12);
        previous = e;
    }
}

TEST_CASE("oracle argument checks") {
    ModelParams p;
    CHECK_THROWS_AS(oracle_spectrum(p, FermionConfig({0}), 40, 1), DomainError);
    CHECK_THROWS_AS(oracle_spectrum(p, FermionConfig({0}), 60, 0), DomainError);
}

TEST_CASE("compare_spectra modes and fault injection") {
    const std::vector<double> a{0.0, 1.0, 2.5, 7.0};
    auto same = compare_spectra(a, a, 1e-12);
    CHECK(same.pass);
    CHECK(same.max_relative_error == 0.0);

    std::vector<double> shifted = a;
    for (double& x : shifted) x += 3.25;
    CHECK_FALSE(compare_spectra(a, shifted, 1e-6).pass);
    const auto off = compare_spectra(a, shifted, 1e-12, CompareMode::constant_offset);
    CHECK(off.pass);
    CHECK(off.fitted_offset == 3.25);

    std::vector<double> faulty = a;
    faulty[2] += 1e-3;
    const auto bad = compare_spectra(faulty, a, 1e-6);
    CHECK_FALSE(bad.pass);
    CHECK(bad.argmax == 2);

    CHECK_THROWS_AS(compare_spectra(a, std::vector<double>{1.0}, 1e-6), UsageError);
}

TEST_CASE("attach_comparison fills residuals") {
    ModelParams p;
    p.phi = 0.4;
    const FermionConfig cfg({1});
    auto r = oracle_spectrum(p, cfg, 100, 3);
    std::vector<double> wrong = r.levels;
    wrong[1] += 0.5;
    attach_comparison(r, wrong);
    CHECK(r.max_abs_residual == doctest::Approx(0.5));
    CHECK(r.relative_errors.size() == 3);
}
