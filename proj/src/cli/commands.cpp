#include "fluxqm/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <thread>

#include "fluxqm/dirac_ring.hpp"
#include "fluxqm/errors.hpp"
#include "fluxqm/fock_oracle.hpp"
#include "fluxqm/linear_diag.hpp"
#include "fluxqm/nonlinear_cavity.hpp"
#include "fluxqm/phase_scan.hpp"
#include "fluxqm/spin_orbit.hpp"
#include "fluxqm/synthetic_jj.hpp"

namespace fluxqm::cli {

namespace {

using Rows = std::vector<std::vector<Cell>>;

struct CommandSpec {
    std::string_view name;
    std::vector<std::string_view> keys;       // accepted config keys
    std::vector<std::string_view> scannable;  // keys allowed as scan.param
    std::vector<Column> columns;              // after point, scan_value, status
    std::function<Rows(const RunConfig&)> evaluate;
    int phase_column = -1;  // index into `columns` used for the phase bracket
    std::function<void(const RunConfig&, const std::optional<ScanAxis>&, Table&)> summarize;
    // Marks rows that count as failures although evaluation returned.
    std::function<bool(const std::vector<Cell>&)> failed;
};

Cell opt_double(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

Cell as_int(std::int64_t v) { return Cell{v}; }

ModelParams model_params(const RunConfig& c) {
    ModelParams p;
    p.g = c.get_double("g", p.g);
    p.g_eff = c.get_double("g_eff", p.g_eff);
    p.phi = c.get_double("phi", p.phi);
    p.n_particles = static_cast<int>(c.get_int("n_particles", p.n_particles));
    p.hbar_omega = c.get_double("hbar_omega", p.hbar_omega);
    p.eta = c.get_double("eta", p.eta);
    return p;
}

FermionConfig fermion_config(const RunConfig& c, int n_particles) {
    std::vector<int> fallback(n_particles);
    for (int i = 0; i < n_particles; ++i) fallback[i] = i - (n_particles - 1) / 2;
    auto orbitals = c.get_int_list("orbitals", fallback);
    if (c.has("spins")) return FermionConfig(std::move(orbitals), c.get_int_list("spins", {}));
    return FermionConfig(std::move(orbitals));
}

const std::vector<std::string_view> kModelKeys{"g", "g_eff", "phi", "n_particles", "hbar_omega", "eta"};

std::vector<std::string_view> with(std::vector<std::string_view> base, std::initializer_list<std::string_view> more) {
    base.insert(base.end(), more.begin(), more.end());
    return base;
}

// ---- spectrum ---------------------------------------------------------------

CommandSpec spectrum_spec() {
    CommandSpec s;
    s.name = "spectrum";
    s.keys = with(kModelKeys, {"orbitals", "spins", "levels"});
    s.scannable = kModelKeys;
    s.columns = {
        {"m_total", "total angular momentum M"},
        {"w_kinetic", "sum of m_i^2"},
        {"sigma_total", "total spin Sigma (0 when spinless)"},
        {"chi", "induced collective coupling"},
        {"omega_dressed", "dressed mode energy hbar Omega"},
        {"squeeze_r", "squeeze parameter r"},
        {"x_variance", "ground-state <x^2> - <x>^2, x = (a + a^+)/sqrt2"},
        {"p_variance", "ground-state <p^2> - <p>^2"},
        {"displacement_a", "ground-state <a>"},
        {"n", "photon index"},
        {"energy", "sector energy in the bare a^+a convention"},
    };
    s.evaluate = [](const RunConfig& c) {
        const ModelParams p = model_params(c);
        p.validate();
        const FermionConfig cfg = fermion_config(c, p.n_particles);
        if (cfg.size() != p.n_particles) throw UsageError("spectrum: orbitals must list n_particles entries");
        const auto levels = c.get_int("levels", 6);
        if (levels < 1) throw UsageError("spectrum: levels must be >= 1");
        const auto sol = squeeze_solution(p);
        const double drive = 2.0 * p.g * p.phi * cfg.m_total() + p.eta * cfg.sigma_total();
        const double a = drive / p.stiffened_energy();
        const bool spinful = cfg.has_spins();
        if (!spinful && p.eta != 0.0) throw UsageError("spectrum: eta != 0 needs spins");
        Rows rows;
        for (int n = 0; n < levels; ++n) {
            const double e = spinful ? to_linear_convention(p, spin_sector_energy(p, cfg, n)) : sector_energy(p, cfg, n);
            rows.push_back({as_int(cfg.m_total()), as_int(cfg.w_kinetic()), as_int(cfg.sigma_total()), sol.chi,
                            sol.omega_dressed, sol.squeeze_r, sol.x_variance(), sol.p_variance(), a, as_int(n), e});
        }
        return rows;
    };
    return s;
}

// ---- phase-scan -------------------------------------------------------------

CommandSpec phase_scan_spec() {
    CommandSpec s;
    s.name = "phase-scan";
    s.keys = {"g", "g_eff", "phi", "n_particles", "hbar_omega", "m_max"};
    s.scannable = {"g", "g_eff", "phi", "hbar_omega"};
    s.columns = {
        {"phi", "flux-coupling amplitude"},
        {"chi", "induced collective coupling"},
        {"config", "ground-state orbitals, ';'-separated"},
        {"order_m", "total angular momentum M of the ground state"},
        {"energy", "ground-state energy (photon index 0)"},
        {"displacement_a", "cavity displacement <a>"},
        {"photon_number", "|<a>|^2"},
        {"phase", "balanced or polarized"},
        {"boundary_contact", "an orbital sits at |m| = m_max (cutoff-limited)"},
        {"even_n", "N even: balanced means |M| = N/2"},
    };
    s.phase_column = 7;
    s.evaluate = [](const RunConfig& c) {
        ModelParams p = model_params(c);
        const auto m_max = c.get_int("m_max", 8);
        if (m_max < 0 || m_max > 1000) throw UsageError("phase-scan: m_max out of range");
        const auto gs = ground_state_search(p, static_cast<int>(m_max), 1);
        return Rows{{p.phi, induced_coupling(p), gs.config.to_string(), as_int(gs.order_m), gs.energy,
                     gs.displacement_a, gs.photon_number, std::string(phase_name(gs.phase)), gs.boundary_contact,
                     p.n_particles % 2 == 0}};
    };
    s.summarize = [](const RunConfig& c, const std::optional<ScanAxis>& axis, Table& t) {
        if (!axis || axis->param != "phi") return;
        try {
            t.summary.emplace_back("critical_flux", critical_flux(model_params(c)));
        } catch (const NoTransitionError&) {
            t.summary.emplace_back("critical_flux", std::string("none"));
        }
    };
    return s;
}

// ---- spin-phase -------------------------------------------------------------

CommandSpec spin_phase_spec() {
    CommandSpec s;
    s.name = "spin-phase";
    s.keys = kModelKeys;
    s.scannable = kModelKeys;
    s.columns = {
        {"determinant", "det of the (M, Sigma) Hessian"},
        {"eig_low", "lower Hessian eigenvalue"},
        {"eig_high", "upper Hessian eigenvalue"},
        {"soft_m", "M component of the soft eigenvector"},
        {"soft_sigma", "Sigma component of the soft eigenvector"},
        {"phase", "stable or unstable balanced state"},
        {"eta_c", "Zeeman coupling where det = 0 (empty when none)"},
        {"locking_ratio", "M / Sigma of the soft mode at eta_c (empty when none)"},
        {"pure_orbital", "soft mode is purely orbital"},
    };
    s.phase_column = 5;
    s.evaluate = [](const RunConfig& c) {
        const ModelParams p = model_params(c);
        const auto h = hessian(p);
        std::optional<double> eta_c, ratio;
        bool pure = false;
        try {
            eta_c = critical_eta_general(p);
            const auto lr = locking_ratio(p);
            pure = lr.pure_orbital;
            if (!pure) ratio = lr.value;
        } catch (const NoTransitionError&) {
        }
        return Rows{{h.determinant, h.eigenvalues[0], h.eigenvalues[1], h.soft_vector[0], h.soft_vector[1],
                     std::string(h.stable ? "stable" : "unstable"), opt_double(eta_c), opt_double(ratio), pure}};
    };
    s.summarize = [](const RunConfig& c, const std::optional<ScanAxis>&, Table& t) {
        const ModelParams p = model_params(c);
        if (std::fabs(p.g_eff - p.g) <= 1e-12 * std::max(p.g, p.g_eff)) {
            t.summary.emplace_back("critical_eta", critical_eta(p));
            return;
        }
        try {
            t.summary.emplace_back("critical_flux_spin", critical_flux_spin(p));
        } catch (const NoTransitionError&) {
            t.summary.emplace_back("critical_flux_spin", std::string("none"));
        }
    };
    return s;
}

// ---- dirac-scan -------------------------------------------------------------

DiracParams dirac_params(const RunConfig& c) {
    DiracParams p;
    p.eps0 = c.get_double("eps0", p.eps0);
    p.beta_berry = c.get_double("beta_berry", p.beta_berry);
    p.g_d = static_cast<int>(c.get_int("g_d", p.g_d));
    p.hbar_omega = c.get_double("hbar_omega", p.hbar_omega);
    p.phi = c.get_double("phi", p.phi);
    p.n_electrons = static_cast<int>(c.get_int("n_electrons", p.n_electrons));
    p.d_eff = c.get_double("d_eff", p.d_eff);
    return p;
}

CommandSpec dirac_scan_spec() {
    CommandSpec s;
    s.name = "dirac-scan";
    s.keys = {"eps0", "beta_berry", "g_d", "hbar_omega", "phi", "n_electrons", "d_eff", "j_max"};
    s.scannable = {"eps0", "hbar_omega", "phi", "d_eff"};
    s.columns = {
        {"lambda", "linear coupling eps0 phi"},
        {"chi", "induced coupling"},
        {"chi_c", "critical coupling eps0 / (4 g_d)"},
        {"chirality", "minimising chirality J = N+ - N-"},
        {"n_plus", "electrons on the m >= 0 branch"},
        {"n_minus", "electrons on the m <= -1 branch"},
        {"e_eff", "effective ground-state functional at J"},
        {"kinetic_exact", "consecutive-filling kinetic energy at J"},
        {"mean_a", "cavity displacement <a>"},
        {"photon_number", "<a^+ a>"},
        {"phase", "balanced (|J| minimal) or polarized"},
    };
    s.phase_column = 10;
    s.evaluate = [](const RunConfig& c) {
        const DiracParams p = dirac_params(c);
        p.validate();
        const auto j_max = c.get_int("j_max", -1);
        const double chi = induced_coupling_dirac(p);
        const int j = chirality_argmin(p, chi, static_cast<int>(j_max));
        const auto sector = ChiralSector::from_chirality(p.n_electrons, j);
        const auto disp = flux_displacement(j, p);
        const bool balanced = std::abs(j) == p.n_electrons % 2;
        return Rows{{p.lambda(), chi, critical_chi_dirac(p), as_int(j), as_int(sector.n_plus), as_int(sector.n_minus),
                     effective_energy(j, p, chi), filled_branch_energy(sector, p), disp.mean_a, disp.photon_number,
                     std::string(balanced ? "balanced" : "polarized")}};
    };
    s.summarize = [](const RunConfig& c, const std::optional<ScanAxis>&, Table& t) {
        const DiracParams p = dirac_params(c);
        t.summary.emplace_back("critical_chi", critical_chi_dirac(p));
        try {
            t.summary.emplace_back("critical_flux", critical_flux_dirac(p));
        } catch (const NoTransitionError&) {
            t.summary.emplace_back("critical_flux", std::string("none"));
        }
    };
    return s;
}

// ---- nonlinear --------------------------------------------------------------

CommandSpec nonlinear_spec() {
    CommandSpec s;
    s.name = "nonlinear";
    s.keys = {"g", "phi", "n_particles", "hbar_omega", "alpha4", "m_min", "m_max", "levels", "basis_cutoff", "s2"};
    s.scannable = {"g", "phi", "hbar_omega", "alpha4"};
    s.columns = {
        {"m_total", "total angular momentum M"},
        {"x0", "classical displacement root"},
        {"b_eff", "B + 6 alpha4 x0^2"},
        {"beta3", "cubic coefficient 4 alpha4 x0"},
        {"v_eff", "classical potential at x0"},
        {"omega", "Gaussian mode energy hbar Omega(M)"},
        {"omega_ratio", "Omega(M) / omega_p"},
        {"cubic_residual", "residual of the stationarity cubic at x0"},
        {"basis_used", "converged oscillator basis size (empty when levels = 0)"},
        {"n", "level index (empty when levels = 0)"},
        {"eps", "residual-oscillator eigenvalue"},
        {"energy", "g S2 + V_eff + eps"},
    };
    s.evaluate = [](const RunConfig& c) {
        ModelParams p;
        p.g = c.get_double("g", p.g);
        p.phi = c.get_double("phi", p.phi);
        p.n_particles = static_cast<int>(c.get_int("n_particles", p.n_particles));
        p.hbar_omega = c.get_double("hbar_omega", p.hbar_omega);
        const double alpha4 = c.get_double("alpha4", 0.02);
        const auto m_min = c.get_int("m_min", -40);
        const auto m_max = c.get_int("m_max", 40);
        const auto levels = c.get_int("levels", 0);
        const auto basis = c.get_int("basis_cutoff", 32);
        const auto s2 = c.get_int("s2", 0);
        if (m_min > m_max) throw UsageError("nonlinear: m_min must not exceed m_max");
        if (levels < 0 || (levels > 0 && basis < 4 * levels)) throw UsageError("nonlinear: basis_cutoff must be >= 4 levels");
        Rows rows;
        for (const auto& row : omega_table(p, alpha4, m_min, m_max)) {
            const auto sector = displacement_root(row.m_total, p, alpha4);
            const std::vector<Cell> head{as_int(row.m_total), sector.x0, sector.b_eff, sector.beta3, sector.v_eff,
                                         row.omega, row.omega / p.hbar_omega, sector.residual()};
            if (levels == 0) {
                auto r = head;
                r.insert(r.end(), {Cell{}, Cell{}, Cell{}, Cell{}});
                rows.push_back(std::move(r));
                continue;
            }
            const auto spec = anharmonic_spectrum(sector, static_cast<int>(levels), static_cast<int>(basis));
            const auto full = spec.full_energies(sector, p.g, s2);
            for (int n = 0; n < levels; ++n) {
                auto r = head;
                r.insert(r.end(), {as_int(spec.basis_used), as_int(n), spec.eps[n], full[n]});
                rows.push_back(std::move(r));
            }
        }
        return rows;
    };
    s.summarize = [](const RunConfig&, const std::optional<ScanAxis>& axis, Table& t) {
        if (axis || t.rows.empty()) return;
        // single table: report the softest sector
        const std::vector<Cell>* soft = nullptr;
        for (const auto& row : t.rows) {
            const auto* omega = std::get_if<double>(&row[8]);
            if (omega && (!soft || *omega < std::get<double>((*soft)[8]))) soft = &row;
        }
        if (soft) t.summary.emplace_back("softest_m", (*soft)[3]);
    };
    return s;
}

// ---- tbjj -------------------------------------------------------------------

CommandSpec tbjj_spec() {
    CommandSpec s;
    s.name = "tbjj";
    s.keys = {"t", "eta", "flux_quanta", "hbar_omega", "m_sites", "occupations", "c_sum", "s_sum", "levels",
              "cutoff", "xrep", "x_min", "x_max", "n_points"};
    s.scannable = {"t", "eta", "flux_quanta", "hbar_omega", "c_sum", "s_sum"};
    s.columns = {
        {"c_sum", "C = sum cos(k a)"},
        {"s_sum", "S = sum sin(k a)"},
        {"eta", "Peierls coupling"},
        {"e_j", "rf-SQUID E_J (empty at eta = 0)"},
        {"phi_ext", "rf-SQUID external phase"},
        {"e_l", "rf-SQUID E_L"},
        {"e_c", "rf-SQUID E_C"},
        {"beta_ratio", "E_J / E_L"},
        {"cutoff_used", "converged Fock cutoff"},
        {"splitting", "E_1 - E_0"},
        {"xrep_max_rel_diff", "largest relative gap to the real-space solver (empty unless xrep)"},
        {"n", "level index"},
        {"energy", "sector level, a^+a convention"},
    };
    s.evaluate = [](const RunConfig& c) {
        const auto m_sites = c.get_int("m_sites", 6);
        if (m_sites < 1 || m_sites > 1'000'000) throw UsageError("tbjj: m_sites out of range");
        TBSector sector;
        if (c.has("c_sum") || c.has("s_sum")) {
            if (c.has("occupations")) throw UsageError("tbjj: give occupations or c_sum/s_sum, not both");
            sector = sector_from_sums(c.get_double("c_sum", 0.0), c.get_double("s_sum", 0.0));
        } else {
            sector = sector_constants(c.get_int_list("occupations", {0}), static_cast<int>(m_sites));
        }
        if (c.has("eta") && c.has("flux_quanta")) throw UsageError("tbjj: give eta or flux_quanta, not both");
        const double eta = c.has("flux_quanta") ? peierls_eta(c.get_double("flux_quanta", 0.0), static_cast<int>(m_sites))
                                                : c.get_double("eta", 1.0);
        const double t = c.get_double("t", 1.0);
        const double hw = c.get_double("hbar_omega", 1.0);
        const auto levels = c.get_int("levels", 5);
        const auto cutoff = c.get_int("cutoff", 40);
        if (levels < 2 || cutoff < 4 * levels) throw UsageError("tbjj: need levels >= 2 and cutoff >= 4 levels");
        const auto fock = sector_spectrum_fock(sector, t, eta, hw, static_cast<int>(cutoff), static_cast<int>(levels));
        std::optional<RfSquidParams> map;
        if (eta != 0.0) map = rf_squid_map(sector, t, eta, hw);
        std::optional<double> xdiff;
        if (c.get_bool("xrep", false)) {
            const Grid1D grid{c.get_double("x_min", -12), c.get_double("x_max", 12),
                              static_cast<int>(c.get_int("n_points", 1200))};
            const auto x = sector_spectrum_xrep(sector, t, eta, hw, grid, static_cast<int>(levels));
            double worst = 0.0;
            for (int i = 0; i < levels; ++i) {
                const double ref = fock.levels[i];
                worst = std::max(worst, std::fabs(x.levels[i] - 0.5 * hw - ref) / std::max(std::fabs(ref), 1.0));
            }
            xdiff = worst;
        }
        auto field = [&](double RfSquidParams::*member) { return map ? Cell{(*map).*member} : Cell{}; };
        Rows rows;
        for (int n = 0; n < levels; ++n) {
            rows.push_back({sector.c_sum, sector.s_sum, eta, field(&RfSquidParams::e_j), field(&RfSquidParams::phi_ext),
                            field(&RfSquidParams::e_l), field(&RfSquidParams::e_c), field(&RfSquidParams::beta_ratio),
                            as_int(fock.cutoff_used), tunnel_splitting(fock.levels), opt_double(xdiff), as_int(n),
                            fock.levels[n]});
        }
        return rows;
    };
    return s;
}

// ---- oracle-check -----------------------------------------------------------

CommandSpec oracle_check_spec() {
    CommandSpec s;
    s.name = "oracle-check";
    s.keys = with(kModelKeys, {"orbitals", "spins", "cutoff", "levels", "tol"});
    s.scannable = kModelKeys;
    s.columns = {
        {"g", "bare orbital scale"},
        {"g_eff", "effective orbital scale"},
        {"phi", "flux-coupling amplitude"},
        {"eta", "Zeeman coupling"},
        {"config", "fermion configuration"},
        {"cutoff_used", "Fock cutoff"},
        {"converged", "levels stable under cutoff doubling"},
        {"convergence_change", "largest relative change under doubling"},
        {"max_rel_error", "largest relative gap between closed form and oracle"},
        {"argmax_level", "level index of max_rel_error"},
        {"pass", "max_rel_error <= tol and converged"},
    };
    s.failed = [](const std::vector<Cell>& row) {
        const auto* pass = std::get_if<bool>(&row.back());
        return pass && !*pass;
    };
    s.evaluate = [](const RunConfig& c) {
        const auto cutoff = c.get_int("cutoff", 200);
        const auto levels = c.get_int("levels", 6);
        const double tol = c.get_double("tol", 1e-8);
        if (cutoff < 50 || cutoff > 4000 || levels < 1 || levels > cutoff) {
            throw UsageError("oracle-check: need 50 <= cutoff <= 4000 and 1 <= levels <= cutoff");
        }
        struct Case {
            ModelParams p;
            FermionConfig cfg;
        };
        std::vector<Case> cases;
        if (c.has("orbitals")) {
            ModelParams p = model_params(c);
            FermionConfig cfg = fermion_config(c, p.n_particles);
            p.n_particles = cfg.size();
            cases.push_back({p, cfg});
        } else {
            // default suite: closed form against the oracle on a small grid
            const std::vector<std::vector<int>> configs{{0}, {1}, {-1, 0, 1}, {0, 1, 2}, {-2, -1, 0, 1, 3}};
            const std::vector<double> gs = c.has("g") ? std::vector<double>{c.get_double("g", 1)}
                                                      : std::vector<double>{0.5, 1.0, 2.0};
            const std::vector<double> phis = c.has("phi") ? std::vector<double>{c.get_double("phi", 0)}
                                                          : std::vector<double>{0.0, 0.5, 1.0};
            for (double g : gs) {
                for (double phi : phis) {
                    for (const auto& orbitals : configs) {
                        ModelParams p = model_params(c);
                        p.g = g;
                        p.phi = phi;
                        p.eta = 0.0;
                        p.n_particles = static_cast<int>(orbitals.size());
                        cases.push_back({p, FermionConfig(orbitals)});
                    }
                }
            }
        }
        Rows rows;
        for (const auto& [p, cfg] : cases) {
            auto report = oracle_spectrum(p, cfg, static_cast<int>(cutoff), static_cast<int>(levels));
            std::vector<double> analytic(levels);
            for (int n = 0; n < levels; ++n) {
                analytic[n] = cfg.has_spins() ? to_linear_convention(p, spin_sector_energy(p, cfg, n))
                                              : sector_energy(p, cfg, n);
            }
            const auto cmp = compare_spectra(analytic, report.levels, tol);
            rows.push_back({p.g, p.g_eff, p.phi, p.eta, cfg.to_string(), as_int(report.cutoff_used), report.converged,
                            report.convergence_change, cmp.max_relative_error, as_int(cmp.argmax),
                            cmp.pass && report.converged});
        }
        return rows;
    };
    s.summarize = [](const RunConfig&, const std::optional<ScanAxis>&, Table& t) {
        std::int64_t total = 0, passed = 0;
        double worst = 0.0;
        for (const auto& row : t.rows) {
            const auto* pass = std::get_if<bool>(&row.back());
            if (!pass) continue;
            ++total;
            passed += *pass ? 1 : 0;
            if (const auto* e = std::get_if<double>(&row[row.size() - 3])) worst = std::max(worst, *e);
        }
        t.summary.emplace_back("comparisons", total);
        t.summary.emplace_back("passed", passed);
        t.summary.emplace_back("worst_rel_error", worst);
    };
    return s;
}

const std::vector<CommandSpec>& specs() {
    static const std::vector<CommandSpec> all{spectrum_spec(),   phase_scan_spec(), spin_phase_spec(),
                                              dirac_scan_spec(), nonlinear_spec(),  tbjj_spec(),
                                              oracle_check_spec()};
    return all;
}

struct PointResult {
    Rows rows;
    std::string error;  // numeric failure
    std::exception_ptr usage;
};

}  // namespace

std::span<const std::string_view> command_names() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> v;
        for (const auto& s : specs()) v.push_back(s.name);
        return v;
    }();
    return names;
}

RunResult run_command(std::string_view command, const RunConfig& config, int jobs) {
    const auto it = std::find_if(specs().begin(), specs().end(), [&](const CommandSpec& s) { return s.name == command; });
    if (it == specs().end()) throw UsageError("unknown command: " + std::string(command));
    const CommandSpec& spec = *it;
    config.require_known(spec.keys);
    const auto axis = scan_axis(config, spec.scannable);
    const std::vector<double> points = axis ? axis->points() : std::vector<double>{NAN};

    std::vector<PointResult> results(points.size());
    auto work = [&](std::size_t i) {
        RunConfig local = config;
        if (axis) local.set(axis->param, format_double(points[i]));
        try {
            results[i].rows = spec.evaluate(local);
        } catch (const UsageError&) {
            results[i].usage = std::current_exception();
        } catch (const std::exception& e) {
            results[i].error = e.what();
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(jobs < 1 ? 1 : static_cast<std::size_t>(jobs), 1, points.size());
    if (workers == 1) {
        for (std::size_t i = 0; i < points.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < points.size(); i = next++) work(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    for (const auto& r : results) {
        if (r.usage) std::rethrow_exception(r.usage);
    }

    RunResult out;
    Table& t = out.table;
    t.command = std::string(spec.name);
    for (const auto& [key, value] : config.values()) t.parameters.emplace_back(key, value);
    t.columns = {{"point", "scan point index"},
                 {"scan_value", axis ? "value of " + axis->param : "empty: no scan axis"},
                 {"status", "ok, or the numeric failure at this point"}};
    t.columns.insert(t.columns.end(), spec.columns.begin(), spec.columns.end());

    std::vector<std::pair<std::size_t, std::string>> phases;  // (point, label)
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Cell scan_value = axis ? Cell{points[i]} : Cell{};
        const auto& r = results[i];
        if (!r.error.empty()) {
            ++out.failed_points;
            std::vector<Cell> row{as_int(static_cast<std::int64_t>(i)), scan_value, "error: " + r.error};
            row.resize(t.columns.size());
            t.rows.push_back(std::move(row));
            continue;
        }
        bool point_failed = false;
        for (const auto& body : r.rows) {
            const bool bad = spec.failed && spec.failed(body);
            point_failed = point_failed || bad;
            std::vector<Cell> row{as_int(static_cast<std::int64_t>(i)), scan_value,
                                  std::string(bad ? "failed" : "ok")};
            row.insert(row.end(), body.begin(), body.end());
            t.rows.push_back(std::move(row));
        }
        if (point_failed) ++out.failed_points;
        if (spec.phase_column >= 0 && !r.rows.empty()) {
            phases.emplace_back(i, cell_text(r.rows.front()[spec.phase_column]));
        }
    }

    if (spec.phase_column >= 0 && axis) {
        // first change between consecutive successful points, as an interval
        bool found = false;
        for (std::size_t k = 1; k < phases.size() && !found; ++k) {
            if (phases[k].first == phases[k - 1].first + 1 && phases[k].second != phases[k - 1].second) {
                t.summary.emplace_back("phase_change_lower", points[phases[k - 1].first]);
                t.summary.emplace_back("phase_change_upper", points[phases[k].first]);
                t.summary.emplace_back("phase_before", phases[k - 1].second);
                t.summary.emplace_back("phase_after", phases[k].second);
                found = true;
            }
        }
        if (!found) t.summary.emplace_back("phase_change", std::string("none"));
    }
    if (spec.summarize) spec.summarize(config, axis, t);
    t.summary.emplace_back("failed_points", static_cast<std::int64_t>(out.failed_points));
    return out;
}

int exit_status(const RunResult& result) { return result.failed_points > 0 ? 1 : 0; }

}  // namespace fluxqm::cli
