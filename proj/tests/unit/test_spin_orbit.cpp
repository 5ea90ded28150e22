#include <doctest.h>

#include <cmath>

#include "fluxqm/errors.hpp"
#include "fluxqm/fock_oracle.hpp"
#include "fluxqm/linear_diag.hpp"
#include "fluxqm/phase_scan.hpp"
#include "fluxqm/spin_orbit.hpp"
#include "test_support.hpp"

using namespace fluxqm;
using fluxqm::testing::rel_diff;

namespace {

ModelParams params(double g, double g_eff, double phi, int n, double hw, double eta) {
    ModelParams p;
    p.g = g;
    p.g_eff = g_eff;
    p.phi = phi;
    p.n_particles = n;
    p.hbar_omega = hw;
    p.eta = eta;
    return p;
}

template <class F>
double bisect(F f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("spin sector energy limits") {
    const auto p = params(0.8, 0.5, 0.6, 3, 1.2, 0.0);
    const FermionConfig spin({-1, 0, 2}, {1, -1, 1});
    const FermionConfig plain({-1, 0, 2});
    CHECK(rel_diff(to_linear_convention(p, spin_sector_energy(p, spin, 2)), sector_energy(p, plain, 2)) < 1e-14);
    CHECK_THROWS_AS(spin_sector_energy(p, plain, 0), DomainError);

    const auto z = params(0.8, 0.5, 0.0, 2, 1.5, 0.3);
    const FermionConfig up({-1, 1}, {1, 1});
    CHECK(rel_diff(spin_sector_energy(z, up, 1), 0.5 * 2 - 0.09 * 4 / 1.5 + 1.5 * 1.5) < 1e-14);

    const auto q = params(0.8, 0.5, 0.6, 2, 1.5, 0.3);
    const FermionConfig a({0, 2}, {1, 1});
    const FermionConfig b({-2, 0}, {-1, -1});
    CHECK(spin_sector_energy(q, a, 0) == spin_sector_energy(q, b, 0));
}

TEST_CASE("spin sector energy agrees with the Zeeman oracle") {
    for (int i = 0; i < 10; ++i) {
        const auto p = params(testing::uniform(0.2, 1.5), testing::uniform(0.2, 1.5), testing::uniform(0, 1.2), 2,
                              testing::uniform(0.5, 2), testing::uniform(-1, 1));
        const FermionConfig cfg({testing::uniform_int(-3, -1), testing::uniform_int(0, 3)},
                                {testing::uniform_int(0, 1) * 2 - 1, testing::uniform_int(0, 1) * 2 - 1});
        const auto oracle = oracle_spectrum(p, cfg, 250, 4);
        for (int n = 0; n < 4; ++n) {
            const double e = to_linear_convention(p, spin_sector_energy(p, cfg, n));
            REQUIRE(std::fabs(e - oracle.levels[n]) / std::max(1.0, std::fabs(oracle.levels[n])) < 1e-8);
        }
    }
}

TEST_CASE("hessian decoupled, eta_c and phi = 0 determinant roots") {
    const auto dec = hessian(params(1, 0.7, 0, 3, 1, 0));
    CHECK(dec.matrix[0][0] == doctest::Approx(2 * 0.7 / 3));
    CHECK(dec.matrix[1][1] == doctest::Approx(0.7 * 3 / 2));
    CHECK(dec.matrix[0][1] == 0.0);
    CHECK(dec.stable);

    auto p = params(1.3, 1.3, 0.8, 5, 0.9, 0);
    p.eta = critical_eta(p);
    CHECK(std::fabs(hessian(p).determinant) < 1e-10);

    auto q = params(1, 0.6, 0, 4, 1.5, 0);
    q.eta = std::sqrt(0.6 * 4 * 1.5 / 4);
    CHECK(std::fabs(hessian(q).determinant) < 1e-12);
}

TEST_CASE("critical eta examples and stability flip") {
    CHECK(critical_eta(params(1, 1, 0, 4, 1, 0)) == 1.0);
    CHECK(critical_eta(params(1, 1, 0, 16, 1, 0)) == 2.0);
    CHECK_THROWS_AS(critical_eta(params(1, 0.9, 0, 4, 1, 0)), DomainError);
    auto p = params(0.7, 0.7, 0.4, 3, 1.1, 0);
    const double eta_c = critical_eta(p);
    p.eta = eta_c * (1 - 1e-6);
    CHECK(hessian(p).stable);
    p.eta = eta_c * (1 + 1e-6);
    CHECK_FALSE(hessian(p).stable);
}

TEST_CASE("critical flux with Zeeman coupling") {
    CHECK(rel_diff(critical_flux_spin(params(1, 2, 0, 1, 1, 1)), std::sqrt(0.5)) < 1e-15);
    CHECK_THROWS_AS(critical_flux_spin(params(1, 1, 0, 1, 1, 1)), DomainError);
    CHECK_THROWS_AS(critical_flux_spin(params(1, 2, 0, 1, 1, 0.1)), NoTransitionError);
    const auto zero = params(2.5, 1.0, 0, 3, 1.4, 0);
    CHECK(rel_diff(critical_flux_spin(zero), critical_flux(zero)) < 1e-14);
    // agrees with the determinant root in phi
    auto p = params(1, 2, 0, 1, 1, 1);
    const double root = bisect(
        [&](double phi) {
            p.phi = phi;
            return hessian(p).determinant;
        },
        1e-6, 5);
    CHECK(rel_diff(root, std::sqrt(0.5)) < 1e-10);
}

TEST_CASE("locking ratio") {
    CHECK(locking_ratio(params(1, 1, 0, 3, 1, 0)).value == 0.0);
    for (int i = 0; i < 200; ++i) {
        auto p = params(testing::uniform(0.1, 2), testing::uniform(0.1, 2), testing::uniform(0, 1), testing::uniform_int(1, 9),
                        testing::uniform(0.2, 3), 0);
        double eta_c;
        try {
            eta_c = critical_eta_general(p);
        } catch (const NoTransitionError&) {
            continue;
        }
        const auto ratio = locking_ratio(p);
        REQUIRE_FALSE(ratio.pure_orbital);
        p.eta = eta_c;
        const auto h = hessian(p);
        REQUIRE(std::fabs(h.eigenvalues[0]) < 1e-9 * std::max(1.0, h.eigenvalues[1]));
        REQUIRE(std::fabs(ratio.value - h.soft_vector[0] / h.soft_vector[1]) <= 1e-8 * std::max(1.0, std::fabs(ratio.value)));
        // Z2: the soft direction for -eta is the mirrored one.
        p.eta = -eta_c;
        const auto m = hessian(p);
        REQUIRE(std::fabs(m.soft_vector[0] / m.soft_vector[1] + ratio.value) <= 1e-8 * std::max(1.0, std::fabs(ratio.value)));
    }
}

TEST_CASE("property: hessian report invariants") {
    for (int i = 0; i < 500; ++i) {
        const auto p = params(testing::uniform(0.1, 2), testing::uniform(0.1, 2), testing::uniform(0, 2),
                              testing::uniform_int(1, 9), testing::uniform(0.2, 3), testing::uniform(-3, 3));
        const auto h = hessian(p);
        REQUIRE(h.matrix[0][1] == h.matrix[1][0]);
        REQUIRE(h.eigenvalues[0] <= h.eigenvalues[1]);
        REQUIRE(std::fabs(std::hypot(h.soft_vector[0], h.soft_vector[1]) - 1) < 1e-14);
        REQUIRE(std::fabs(h.eigenvalues[0] * h.eigenvalues[1] - h.determinant) <=
                1e-10 * std::max(1.0, std::fabs(h.eigenvalues[1] * h.eigenvalues[1])));
        REQUIRE(h.stable == (h.eigenvalues[0] > 0));
    }
}

TEST_CASE("property: determinant root in eta matches the closed forms") {
    for (int i = 0; i < 100; ++i) {
        const double g = testing::uniform(0.1, 2);
        auto p = params(g, g, testing::uniform(0, 1.5), testing::uniform_int(1, 9), testing::uniform(0.2, 3), 0);
        const double closed = critical_eta(p);
        const double root = bisect(
            [&](double eta) {
                p.eta = eta;
                return hessian(p).determinant;
            },
            0, 4 * closed + 1);
        REQUIRE(rel_diff(root, closed) < 1e-8);
    }
}

TEST_CASE("report: continuum stiffness versus small-N enumeration") {
    // Not asserted: the Hessian uses continuum stiffnesses. The printed numbers
    // compare its orbital threshold with the discrete crossing chi_c = g_eff/N.
    for (int n : {1, 3, 5}) {
        const auto p = params(2, 1, 0, n, 1, 0);
        const double phi_hess = std::sqrt(p.hbar_omega * 2 * p.g_eff / (4 * p.g * (4 * p.g * n - 2 * p.g_eff * n)));
        MESSAGE("N=" << n << " discrete phi_c=" << critical_flux(p) << " hessian phi_c=" << phi_hess);
    }
}
