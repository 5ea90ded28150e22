#include "fluxqm/phase_scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>
#include <vector>

#include "fluxqm/errors.hpp"
#include "fluxqm/linear_diag.hpp"
#include "fluxqm/simd/kernels.hpp"

namespace fluxqm {

std::string_view phase_name(Phase phase) { return phase == Phase::balanced ? "balanced" : "polarized"; }

FermionConfig balanced_config(int n_particles) {
    if (n_particles < 1 || n_particles % 2 == 0) {
        throw DomainError("balanced_config: closed form needs odd N >= 1");
    }
    const int k = (n_particles - 1) / 2;
    std::vector<int> orbitals;
    for (int m = -k; m <= k; ++m) orbitals.push_back(m);
    return FermionConfig(std::move(orbitals));
}

FermionConfig boosted_config(const FermionConfig& cfg, int shift) {
    std::vector<int> orbitals(cfg.orbitals().begin(), cfg.orbitals().end());
    for (int& m : orbitals) m += shift;
    if (const auto spins = cfg.spins()) {
        return FermionConfig(std::move(orbitals), std::vector<int>(spins->begin(), spins->end()));
    }
    return FermionConfig(std::move(orbitals));
}

double critical_chi(double g_eff, std::int64_t w_pol, std::int64_t w_bal, std::int64_t m_pol) {
    if (m_pol == 0) throw DomainError("critical_chi: polarized candidate has M = 0");
    const double m = static_cast<double>(m_pol);
    return g_eff * static_cast<double>(w_pol - w_bal) / (m * m);
}

double critical_flux(const ModelParams& p) {
    p.validate();
    if (!(p.g > p.g_eff)) throw NoTransitionError("critical_flux: requires g > g_eff");
    return std::sqrt(p.g_eff * p.hbar_omega / (4.0 * p.g * p.n_particles * (p.g - p.g_eff)));
}

std::int64_t balanced_abs_m(int n_particles) { return n_particles % 2 == 0 ? n_particles / 2 : 0; }

std::uint64_t search_space_size(int n_particles, int m_max) {
    const std::uint64_t l = 2 * static_cast<std::uint64_t>(m_max) + 1;
    const std::uint64_t k = static_cast<std::uint64_t>(n_particles);
    if (k > l) return 0;
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) c = c * (l - k + i) / i;
    return c;
}

namespace {

constexpr std::uint64_t kMaxSearchSpace = 200'000'000;
constexpr std::size_t kChunk = 2048;

struct Candidate {
    double energy = std::numeric_limits<double>::infinity();
    std::int64_t abs_m = std::numeric_limits<std::int64_t>::max();
    std::vector<int> orbitals;  // empty when nothing found

    // Strictly better; equal keys keep the earlier (lexicographically smaller) one.
    bool better_than(double e, std::int64_t am) const { return e < energy || (e == energy && am < abs_m); }
};

// Minimises over all combinations whose smallest orbital is `first`.
Candidate search_prefix(int first, int n, int m_max, double g_eff, double chi) {
    Candidate best;
    const int top = m_max;
    const int k = n - 1;
    std::vector<int> rest(k);
    for (int i = 0; i < k; ++i) rest[i] = first + 1 + i;
    if (k > 0 && rest[k - 1] > top) return best;

    std::vector<double> w(kChunk), m(kChunk), e(kChunk);
    std::vector<int> orbit(kChunk * n);
    bool more = true;
    while (more) {
        std::size_t fill = 0;
        while (more && fill < kChunk) {
            std::int64_t sw = static_cast<std::int64_t>(first) * first;
            std::int64_t sm = first;
            int* slot = orbit.data() + fill * n;
            slot[0] = first;
            for (int i = 0; i < k; ++i) {
                slot[i + 1] = rest[i];
                sw += static_cast<std::int64_t>(rest[i]) * rest[i];
                sm += rest[i];
            }
            w[fill] = static_cast<double>(sw);
            m[fill] = static_cast<double>(sm);
            ++fill;
            // next combination of `rest` in lexicographic order
            int i = k - 1;
            while (i >= 0 && rest[i] == top - (k - 1 - i)) --i;
            if (i < 0) {
                more = false;
            } else {
                ++rest[i];
                for (int j = i + 1; j < k; ++j) rest[j] = rest[j - 1] + 1;
            }
        }
        const std::span<double> es(e.data(), fill);
        simd::sector_energies({w.data(), fill}, {m.data(), fill}, g_eff, chi, es);
        const double lowest = simd::min_value(es);
        if (lowest > best.energy) continue;
        for (std::size_t c = 0; c < fill; ++c) {
            if (e[c] != lowest) continue;
            const auto am = static_cast<std::int64_t>(std::fabs(m[c]));
            if (best.better_than(e[c], am)) {
                best.energy = e[c];
                best.abs_m = am;
                best.orbitals.assign(orbit.data() + c * n, orbit.data() + (c + 1) * n);
            }
        }
    }
    return best;
}

}  // namespace

GroundState ground_state_search(const ModelParams& p, int m_max, int jobs) {
    p.validate();
    const int n = p.n_particles;
    if (2 * m_max + 1 < n || m_max < (n - 1) / 2) {
        throw DomainError("ground_state_search: m_max too small to hold N distinct orbitals");
    }
    if (search_space_size(n, m_max) > kMaxSearchSpace) {
        throw UsageError("ground_state_search: search space too large");
    }
    const double chi = induced_coupling(p);

    const int n_prefix = 2 * m_max + 2 - n;  // first orbital runs over -m_max .. m_max - n + 1
    std::vector<Candidate> per_prefix(n_prefix);
    const int workers = std::max(1, std::min(jobs, n_prefix));
    if (workers == 1) {
        for (int i = 0; i < n_prefix; ++i) per_prefix[i] = search_prefix(-m_max + i, n, m_max, p.g_eff, chi);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (int i = next++; i < n_prefix; i = next++) {
                    per_prefix[i] = search_prefix(-m_max + i, n, m_max, p.g_eff, chi);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    // Prefixes are visited in lexicographic order, so the in-order reduction
    // reproduces the single-threaded tie-break.
    Candidate best;
    for (auto& c : per_prefix) {
        if (!c.orbitals.empty() && best.better_than(c.energy, c.abs_m)) best = std::move(c);
    }

    FermionConfig cfg(best.orbitals);
    const bool at_edge = std::any_of(cfg.orbitals().begin(), cfg.orbitals().end(),
                                     [m_max](int m) { return std::abs(m) == m_max; });
    const double a = ground_displacement(p, cfg.m_total());
    const std::int64_t abs_m = cfg.m_total() < 0 ? -cfg.m_total() : cfg.m_total();
    return GroundState{
        cfg,
        sector_energy(p, cfg, 0),
        cfg.m_total(),
        a,
        a * a,
        abs_m == balanced_abs_m(n) ? Phase::balanced : Phase::polarized,
        at_edge,
    };
}

std::optional<std::pair<std::size_t, std::size_t>> first_phase_change(std::span<const Phase> phases) {
    for (std::size_t i = 1; i < phases.size(); ++i) {
        if (phases[i] != phases[i - 1]) return std::make_pair(i - 1, i);
    }
    return std::nullopt;
}

}  // namespace fluxqm
