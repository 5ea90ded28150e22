#include <doctest.h>

#include <cmath>

#include "fluxqm/errors.hpp"
#include "fluxqm/model.hpp"
#include "test_support.hpp"

using namespace fluxqm;
using fluxqm::testing::rel_diff;

TEST_CASE("derive_lc unit values") {
    const auto lc = derive_lc(1.0, 1.0);
    CHECK(lc.omega == 1.0);
    CHECK(lc.impedance == 1.0);
}

TEST_CASE("derive_lc nanohenry / picofarad frequency") {
    // 1/sqrt(1e-21) evaluated at 30 digits: 31622776601.6837933...
    const auto lc = derive_lc(1e-9, 1e-12);
    CHECK(rel_diff(lc.omega, 31622776601.6837933) < 1e-15);
    CHECK(rel_diff(lc.impedance, std::sqrt(1e3)) < 1e-15);
}

TEST_CASE("zero-point flux and charge multiply to hbar/2") {
    const auto special = derive_lc(si::hbar / 2, 2 / si::hbar);
    CHECK(rel_diff(special.phi_zpf * special.q_zpf, si::hbar / 2) < 4e-16);
    for (int i = 0; i < 500; ++i) {
        const double l = std::pow(10.0, testing::uniform(-12, 2));
        const double c = std::pow(10.0, testing::uniform(-15, 1));
        const auto lc = derive_lc(l, c);
        REQUIRE(rel_diff(lc.phi_zpf * lc.q_zpf, si::hbar / 2) < 1e-15);
        REQUIRE(lc.omega > 0);
        REQUIRE(lc.impedance > 0);
    }
}

TEST_CASE("derive_lc rejects non-positive inputs") {
    CHECK_THROWS_AS(derive_lc(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(derive_lc(1.0, -1.0), DomainError);
    CHECK_THROWS_AS(derive_lc(NAN, 1.0), DomainError);
}

TEST_CASE("derive_ring mass and radius scaling") {
    const double e0 = 1.602176634e-22;  // 1 meV
    const auto free = derive_ring(100e-9, 1.0, e0);
    CHECK(free.g == free.g_eff);
    const auto heavy = derive_ring(100e-9, 2.0, e0);
    CHECK(heavy.g_eff == doctest::Approx(free.g / 2).epsilon(1e-15));
    const auto wide = derive_ring(200e-9, 1.0, e0);
    CHECK(wide.g == doctest::Approx(free.g / 4).epsilon(1e-15));
    for (int i = 0; i < 100; ++i) {
        const double ratio = testing::uniform(0.01, 10);
        const auto r = derive_ring(testing::uniform(1e-8, 1e-6), ratio, e0);
        REQUIRE(rel_diff(r.g_eff * ratio, r.g) < 1e-15);
    }
    CHECK_THROWS_AS(derive_ring(0.0, 1.0, e0), DomainError);
    CHECK_THROWS_AS(derive_ring(1e-7, 0.0, e0), DomainError);
}

TEST_CASE("ModelParams validation") {
    ModelParams p;
    CHECK_NOTHROW(p.validate());
    p.phi = -0.1;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = {};
    p.n_particles = 0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = {};
    p.g_eff = 0;
    CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("FermionConfig sorts, caches sums and enforces exclusion") {
    const FermionConfig cfg({2, -1, 0});
    CHECK(std::vector<int>(cfg.orbitals().begin(), cfg.orbitals().end()) == std::vector<int>{-1, 0, 2});
    CHECK(cfg.m_total() == 1);
    CHECK(cfg.w_kinetic() == 5);
    CHECK(cfg.sigma_total() == 0);
    CHECK_FALSE(cfg.has_spins());
    CHECK_THROWS_AS(FermionConfig({1, 1}), PauliError);

    const FermionConfig spinful({1, 1, 0}, {1, -1, 1});
    CHECK(spinful.sigma_total() == 1);
    CHECK(spinful.to_string() == "0u;1d;1u");
    CHECK_THROWS_AS(FermionConfig({1, 1}, {1, 1}), PauliError);
    CHECK_THROWS_AS(FermionConfig({1}, {0}), DomainError);
    CHECK_THROWS_AS(FermionConfig({1, 2}, {1}), UsageError);
}

TEST_CASE("FermionConfig cached sums match recomputation") {
    for (int trial = 0; trial < 300; ++trial) {
        const int n = testing::uniform_int(1, 9);
        const FermionConfig cfg(testing::distinct_ints(n, -20, 20));
        REQUIRE(cfg.consistent());
        std::int64_t m = 0, w = 0;
        for (int x : cfg.orbitals()) {
            m += x;
            w += x * x;
        }
        REQUIRE(cfg.m_total() == m);
        REQUIRE(cfg.w_kinetic() == w);
    }
}
