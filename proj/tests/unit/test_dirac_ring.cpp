#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fluxqm/dirac_ring.hpp"
#include "fluxqm/errors.hpp"
#include "test_support.hpp"

using namespace fluxqm;
using fluxqm::testing::rel_diff;

TEST_CASE("diamagnetic stiffness values") {
    CHECK(rel_diff(diamagnetic_stiffness(1, 0.5, 100, 1), 0.006366197723675813) < 1e-15);
    CHECK(diamagnetic_stiffness(1, 0.5, 100, 1, true) == 2 * diamagnetic_stiffness(1, 0.5, 100, 1));
    CHECK(diamagnetic_stiffness(1, 1e-9, 100, 1) < 1e-10);
    CHECK_THROWS_AS(diamagnetic_stiffness(1, 0.0, 100, 1), DomainError);
    CHECK_THROWS_AS(diamagnetic_stiffness(1, 1.0, 100, 1), DomainError);
    CHECK_THROWS_AS(diamagnetic_stiffness(1, 0.5, 1, 1), DomainError);
    // N_s = 10: -(1/10)^2 <H0> with <H0> = -2(1 + 2cos36 + 2cos72) = -3 - sqrt5 - 1 ... evaluated directly
    double h0 = 0;
    for (int k : {0, 1, -1, 2, -2}) h0 += -2 * std::cos(2 * std::numbers::pi * k / 10);
    CHECK(rel_diff(diamagnetic_stiffness_band_sum(1, 0.5, 10, 1), -h0 / 100) < 1e-15);
    CHECK(std::fabs(diamagnetic_stiffness_band_sum(1, 0.5, 10, 1) - diamagnetic_stiffness(1, 0.5, 10, 1)) < 2e-3);
}

TEST_CASE("band-sum estimator converges at N_s = 200") {
    const double exact = diamagnetic_stiffness_band_sum(1, 0.5, 200, 1);
    CHECK(rel_diff(diamagnetic_stiffness(1, 0.5, 200, 1), exact) < 1e-3);
}

TEST_CASE("induced coupling") {
    DiracParams p;
    CHECK(induced_coupling_dirac(p) == 0.0);
    p.phi = 1;
    p.hbar_omega = 2;
    CHECK(induced_coupling_dirac(p) == 0.5);
    p.d_eff = 1e12;
    CHECK(induced_coupling_dirac(p) < 1e-12);
}

TEST_CASE("effective energy and critical flatness") {
    DiracParams p;
    p.n_electrons = 8;
    CHECK(effective_energy(0, p, 0.3) == doctest::Approx(64.0 / 16));
    const double chi_c = critical_chi_dirac(p);
    for (int j = -8; j <= 8; j += 2) CHECK(effective_energy(j, p, chi_c) == effective_energy(0, p, chi_c));
    CHECK_THROWS_AS(effective_energy(9, p, 0), DomainError);
    for (int j = -8; j <= 8; ++j) CHECK(effective_energy(j, p, 0.1) == effective_energy(-j, p, 0.1));
}

TEST_CASE("exact filled branches versus the continuum functional") {
    DiracParams p;
    p.n_electrons = 8;
    const auto sector = ChiralSector::from_chirality(8, 4);
    CHECK(sector.n_plus == 6);
    CHECK(sector.n_minus == 2);
    const double exact = filled_branch_energy(sector, p);
    const double continuum = effective_energy(4, p, 0.0);
    CHECK(exact == doctest::Approx(6.0));
    CHECK(continuum == doctest::Approx(5.0));
    CHECK(std::fabs(exact - continuum) <= p.eps0 * 1.0);
    CHECK_THROWS_AS(ChiralSector::from_chirality(8, 3), DomainError);
    CHECK_THROWS_AS(ChiralSector::from_chirality(8, 10), DomainError);
}

TEST_CASE("critical flux") {
    DiracParams p;
    p.hbar_omega = 0.37;
    p.eps0 = 1.9;
    CHECK(std::fabs(std::pow(critical_flux_dirac(p), 2) - 0.37 / (16 * 1.9)) < 1e-12);
    DiracParams q;
    q.d_eff = 0.1;
    CHECK(rel_diff(std::pow(critical_flux_dirac(q), 2), 1 / 15.8) < 1e-14);
    q.d_eff = 8;
    CHECK_THROWS_AS(critical_flux_dirac(q), NoTransitionError);
    // the chirality minimiser jumps at the closed-form phi_c
    DiracParams s;
    s.n_electrons = 6;
    s.d_eff = 0.1;
    const double phi_c = critical_flux_dirac(s);
    s.phi = phi_c * (1 - 1e-9);
    CHECK(chirality_argmin(s, induced_coupling_dirac(s)) == 0);
    s.phi = phi_c * (1 + 1e-9);
    CHECK(chirality_argmin(s, induced_coupling_dirac(s)) == 6);
}

TEST_CASE("flux displacement") {
    DiracParams p;
    p.phi = 1;
    CHECK(flux_displacement(0, p).mean_a == 0.0);
    CHECK(flux_displacement(0, p).photon_number == 0.0);
    CHECK(flux_displacement(5, p).mean_a == -5.0);
    CHECK(flux_displacement(5, p).photon_number == 25.0);
    p.d_eff = 0.3;
    p.phi = 0.7;
    CHECK(flux_displacement(-3, p).mean_a == -flux_displacement(3, p).mean_a);
    CHECK(flux_displacement(-3, p).photon_number == flux_displacement(3, p).photon_number);
}

TEST_CASE("property: chirality jump is first order with no intermediate minima") {
    for (int i = 0; i < 300; ++i) {
        DiracParams p;
        p.eps0 = testing::uniform(0.2, 3);
        p.g_d = std::array<int, 3>{1, 2, 4}[testing::uniform_int(0, 2)];
        p.n_electrons = testing::uniform_int(0, 20);
        const double chi_c = critical_chi_dirac(p);
        const double below = chi_c * testing::uniform(0, 0.999);
        const double above = chi_c * testing::uniform(1.001, 3);
        const int j_low = chirality_argmin(p, below);
        REQUIRE(std::abs(j_low) == p.n_electrons % 2);
        REQUIRE(chirality_argmin(p, above) == p.n_electrons);
        for (int j : admissible_chiralities(p.n_electrons, p.n_electrons)) REQUIRE((p.n_electrons - j) % 2 == 0);
    }
}

TEST_CASE("property: linear expansion of the shifted level sum") {
    for (int i = 0; i < 300; ++i) {
        const int n = testing::uniform_int(1, 8);
        const auto occupied = testing::distinct_ints(n, -10, 9);
        const double shift = testing::uniform(-0.49, 0.49);
        double base = 0, moved = 0, chirality = 0;
        for (int m : occupied) {
            base += std::fabs(m + 0.5);
            moved += std::fabs(m + 0.5 + shift);
            chirality += m >= 0 ? 1 : -1;
        }
        REQUIRE(std::fabs((moved - base) - shift * chirality) < 1e-12);
    }
}

TEST_CASE("parameter validation") {
    DiracParams p;
    p.g_d = 3;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = {};
    p.d_eff = -1;
    CHECK_THROWS_AS(p.validate(), DomainError);
}
