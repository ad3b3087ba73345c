#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "output.hpp"
#include "photon_scatter/hwg.hpp"
#include "photon_scatter/lattice.hpp"
#include "photon_scatter/parallel.hpp"
#include "photon_scatter/tcra.hpp"
#include "photon_scatter/three_photon.hpp"
#include "photon_scatter/twg.hpp"
#include "photon_scatter/validate/acceptance.hpp"

namespace ps = photon_scatter;
using ps::Complex;
using ps::cli::Table;

namespace {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Grid {
    std::string var;
    double start = 0.0;
    double stop = 0.0;
    std::size_t points = 0;

    double at(std::size_t i) const {
        return start + (stop - start) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
};

Grid parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 4) throw ConfigError("grid must be var:start:stop:points, got '" + text + "'");
    Grid g;
    g.var = parts[0];
    try {
        std::size_t used = 0;
        g.start = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument("start");
        g.stop = std::stod(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument("stop");
        const long n = std::stol(parts[3], &used);
        if (used != parts[3].size() || n < 2) throw std::invalid_argument("points");
        g.points = static_cast<std::size_t>(n);
    } catch (const std::exception&) {
        throw ConfigError("invalid grid '" + text + "' (points must be an integer >= 2)");
    }
    if (!std::isfinite(g.start) || !std::isfinite(g.stop)) throw ConfigError("grid bounds must be finite");
    return g;
}

/// Options of one subcommand: numeric parameters, grids and free-form strings.
class Spec {
public:
    explicit Spec(CLI::App* app) : app_(app) {}

    double& num(const std::string& name, const std::string& help) {
        double& v = values_[name];
        app_->add_option("--" + name, v, help)->required();
        return v;
    }
    double& num(const std::string& name, const std::string& help, double fallback) {
        double& v = values_[name];
        v = fallback;
        app_->add_option("--" + name, v, help)->capture_default_str();
        return v;
    }
    std::string& text(const std::string& name, const std::string& help, std::string fallback,
                      std::vector<std::string> choices) {
        std::string& v = strings_[name];
        v = std::move(fallback);
        app_->add_option("--" + name, v, help)->check(CLI::IsMember(std::move(choices)))->capture_default_str();
        return v;
    }
    void grids(std::vector<std::string> vars) {
        grid_vars_ = std::move(vars);
        std::string help = "var:start:stop:points with var in {";
        for (std::size_t i = 0; i < grid_vars_.size(); ++i) help += (i ? "," : "") + grid_vars_[i];
        app_->add_option("--grid", raw_grids_, help + "}")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    }

    void check() const {
        for (const auto& [k, v] : values_)
            if (!std::isfinite(v)) throw ConfigError("parameter '" + k + "' is not finite");
    }

    /// Last --grid naming `var`, or the grid of `fallback_var` when absent.
    Grid grid(const std::string& var, const std::string& fallback_var = {}) const {
        std::map<std::string, Grid> by_var;
        for (const auto& raw : raw_grids_) {
            Grid g = parse_grid(raw);
            if (std::find(grid_vars_.begin(), grid_vars_.end(), g.var) == grid_vars_.end())
                throw ConfigError("unknown grid variable '" + g.var + "' for " + app_->get_name());
            by_var[g.var] = g;
        }
        if (auto it = by_var.find(var); it != by_var.end()) return it->second;
        if (!fallback_var.empty())
            if (auto it = by_var.find(fallback_var); it != by_var.end()) return it->second;
        throw ConfigError(app_->get_name() + " requires --grid " + var + ":start:stop:points");
    }

    nlohmann::ordered_json parameters() const {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (const auto& [k, v] : values_) j[k] = v;
        for (const auto& [k, v] : strings_) j[k] = v;
        return j;
    }

private:
    CLI::App* app_;
    std::map<std::string, double> values_;
    std::map<std::string, std::string> strings_;
    std::vector<std::string> grid_vars_;
    std::vector<std::string> raw_grids_;
};

struct Command {
    CLI::App* app;
    std::shared_ptr<Spec> spec;
    std::function<Table(const Spec&)> run;
};

template <class F>
std::vector<double> sweep(std::size_t n, F f) {
    return ps::parallel_map<double>(n, std::function<double(std::size_t)>(f));
}

long integer_site(double x) {
    const double r = std::round(x);
    if (std::abs(x - r) > 1e-9) throw ConfigError("lattice grid points must be integers");
    return static_cast<long>(r);
}

ps::twg::ConnectedMethod method_of(const std::string& m) {
    return m == "quadrature" ? ps::twg::ConnectedMethod::Quadrature : ps::twg::ConnectedMethod::Residue;
}

// --- T-type array --------------------------------------------------------------

void tcra_params(Spec& s, double*& omega, double*& omega0, double*& j, double*& v) {
    omega = &s.num("omega", "atomic level spacing Omega");
    omega0 = &s.num("omega0", "cavity frequency omega_0");
    j = &s.num("J", "hopping J");
    v = &s.num("V", "atom-cavity coupling V");
}

Command t_reflect(CLI::App& root) {
    auto* app = root.add_subcommand("t-reflect", "single-photon reflection r_k on the cosine band");
    auto spec = std::make_shared<Spec>(app);
    double *w, *w0, *j, *v;
    tcra_params(*spec, w, w0, j, v);
    spec->grids({"k"});
    return {app, spec, [=](const Spec& s) {
                const ps::TCRAParams p(*w, *w0, *j, *v);
                const Grid g = s.grid("k");
                Table t;
                auto& k = t.add("k[1/a]", "k");
                auto& re = t.add("Re r[1]", "r_re");
                auto& im = t.add("Im r[1]", "r_im");
                auto& r2 = t.add("|r|^2[1]", "r_abs2");
                auto& t2 = t.add("|1+r|^2[1]", "t_abs2");
                for (std::size_t i = 0; i < g.points; ++i) {
                    const Complex r = ps::tcra::reflection_amplitude(p, g.at(i));
                    k.values.push_back(g.at(i));
                    re.values.push_back(r.real());
                    im.values.push_back(r.imag());
                    r2.values.push_back(std::norm(r));
                    t2.values.push_back(std::norm(1.0 + r));
                }
                return t;
            }};
}

Command bound_states(CLI::App& root) {
    auto* app = root.add_subcommand("bound-states", "energies and decay factors of the two bound states");
    auto spec = std::make_shared<Spec>(app);
    double *w, *w0, *j, *v;
    tcra_params(*spec, w, w0, j, v);
    return {app, spec, [=](const Spec&) {
                const ps::TCRAParams p(*w, *w0, *j, *v);
                const auto b = ps::tcra::bound_state_energies(p);
                Table t;
                t.scalar = true;
                t.add("lower[energy]", "lower").values = {b.lower.energy};
                t.add("upper[energy]", "upper").values = {b.upper.energy};
                t.add("kappa_lower[1]", "kappa_lower").values = {b.lower.kappa()};
                t.add("kappa_upper[1]", "kappa_upper").values = {b.upper.kappa()};
                t.add("amplitude_lower[1]", "amplitude_lower").values = {b.lower.amplitude};
                t.add("amplitude_upper[1]", "amplitude_upper").values = {b.upper.amplitude};
                return t;
            }};
}

Command bound_wavefunction(CLI::App& root) {
    auto* app = root.add_subcommand("bound-wavefunction", "site amplitudes of a bound state");
    auto spec = std::make_shared<Spec>(app);
    double *w, *w0, *j, *v;
    tcra_params(*spec, w, w0, j, v);
    std::string& branch = spec->text("branch", "bound-state branch", "upper", {"upper", "lower"});
    spec->grids({"x"});
    return {app, spec, [=, &branch](const Spec& s) {
                const ps::TCRAParams p(*w, *w0, *j, *v);
                const auto pair = ps::tcra::bound_state_energies(p);
                const auto& b = branch == "upper" ? pair.upper : pair.lower;
                const Grid g = s.grid("x");
                Table t;
                auto& x = t.add("x[a]", "x");
                auto& psi = t.add("psi[1]", "psi");
                auto& psi2 = t.add("|psi|^2[1]", "psi_abs2");
                for (std::size_t i = 0; i < g.points; ++i) {
                    const long site = integer_site(g.at(i));
                    const double val = ps::tcra::bound_state_wavefunction(b, p, site);
                    x.values.push_back(static_cast<double>(site));
                    psi.values.push_back(val);
                    psi2.values.push_back(val * val);
                }
                t.extra["energy"] = b.energy;
                return t;
            }};
}

// --- T-type waveguide ----------------------------------------------------------

void twg_params(Spec& s, double*& omega, double*& gamma) {
    omega = &s.num("omega", "atomic level spacing Omega", 1.0);
    gamma = &s.num("gamma", "decay rate Gamma_T");
}

Command wg_transmit(CLI::App& root) {
    auto* app = root.add_subcommand("wg-transmit", "e-photon transmission t_k of the linearized waveguide");
    auto spec = std::make_shared<Spec>(app);
    double *w, *g;
    twg_params(*spec, w, g);
    spec->grids({"k"});
    return {app, spec, [=](const Spec& s) {
                const ps::TWGParams p(*w, *g);
                const Grid grid = s.grid("k");
                Table t;
                auto& k = t.add("k[Omega]", "k");
                auto& re = t.add("Re t[1]", "t_re");
                auto& im = t.add("Im t[1]", "t_im");
                auto& ph = t.add("arg t[rad]", "t_phase");
                auto& a2 = t.add("|t|^2[1]", "t_abs2");
                for (std::size_t i = 0; i < grid.points; ++i) {
                    const Complex v = ps::twg::transmission_t(p, grid.at(i));
                    k.values.push_back(grid.at(i));
                    re.values.push_back(v.real());
                    im.values.push_back(v.imag());
                    ph.values.push_back(std::arg(v));
                    a2.values.push_back(std::norm(v));
                }
                return t;
            }};
}

Command two_photon_wf(CLI::App& root) {
    auto* app = root.add_subcommand("two-photon-wf", "two-photon out-state against the relative coordinate");
    auto spec = std::make_shared<Spec>(app);
    double *w, *g;
    twg_params(*spec, w, g);
    double& k1 = spec->num("k1", "incident momentum 1");
    double& k2 = spec->num("k2", "incident momentum 2");
    double& xc = spec->num("xc", "center-of-mass coordinate", 0.0);
    spec->grids({"x"});
    return {app, spec, [=, &k1, &k2, &xc](const Spec& s) {
                const ps::twg::TwoPhotonOutState st(ps::TWGParams(*w, *g), k1, k2);
                const Grid grid = s.grid("x");
                Table t;
                auto& x = t.add("x[1/Omega]", "x");
                auto& re = t.add("Re psi[1]", "psi_re");
                auto& im = t.add("Im psi[1]", "psi_im");
                auto& a2 = t.add("|psi|^2[1]", "psi_abs2");
                for (std::size_t i = 0; i < grid.points; ++i) {
                    const Complex v = st(xc, grid.at(i));
                    x.values.push_back(grid.at(i));
                    re.values.push_back(v.real());
                    im.values.push_back(v.imag());
                    a2.values.push_back(std::norm(v));
                }
                return t;
            }};
}

Command fluorescence2(CLI::App& root) {
    auto* app = root.add_subcommand("fluorescence2", "two-photon resonance fluorescence |T|^2 on the shell");
    auto spec = std::make_shared<Spec>(app);
    double *w, *g;
    twg_params(*spec, w, g);
    double& k1 = spec->num("k1", "incident momentum 1");
    double& k2 = spec->num("k2", "incident momentum 2");
    spec->grids({"p1"});
    return {app, spec, [=, &k1, &k2](const Spec& s) {
                const ps::TWGParams p(*w, *g);
                const Grid grid = s.grid("p1");
                Table t;
                auto& p1 = t.add("p1[Omega]", "p1");
                auto& p2 = t.add("p2[Omega]", "p2");
                auto& f = t.add("|T2|^2[1/Omega^2]", "t2_abs2");
                for (std::size_t i = 0; i < grid.points; ++i) {
                    p1.values.push_back(grid.at(i));
                    p2.values.push_back(k1 + k2 - grid.at(i));
                    f.values.push_back(ps::twg::two_photon_fluorescence(p, k1, k2, grid.at(i)));
                }
                return t;
            }};
}

void triple_params(Spec& s, double*& k1, double*& k2, double*& k3) {
    k1 = &s.num("k1", "incident momentum 1");
    k2 = &s.num("k2", "incident momentum 2");
    k3 = &s.num("k3", "incident momentum 3");
}

Command fluorescence3(CLI::App& root) {
    auto* app = root.add_subcommand("fluorescence3", "three-photon connected |T3|^2 on a (p1, p2) slice");
    auto spec = std::make_shared<Spec>(app);
    double *w, *g, *k1, *k2, *k3;
    twg_params(*spec, w, g);
    triple_params(*spec, k1, k2, k3);
    spec->grids({"p1", "p2"});
    return {app, spec, [=](const Spec& s) {
                const ps::twg::ThreePhotonConnectedT tt(ps::TWGParams(*w, *g), {*k1, *k2, *k3});
                const Grid a = s.grid("p1", "p2"), b = s.grid("p2", "p1");
                const double e = tt.total_energy();
                const auto vals = sweep(a.points * b.points, [&](std::size_t idx) {
                    const double x = a.at(idx / b.points), y = b.at(idx % b.points);
                    return std::norm(tt({x, y, e - x - y}));
                });
                Table t;
                auto& p1 = t.add("p1[Omega]", "p1");
                auto& p2 = t.add("p2[Omega]", "p2");
                auto& p3 = t.add("p3[Omega]", "p3");
                auto& f = t.add("|T3|^2[1/Omega^4]", "t3_abs2");
                for (std::size_t idx = 0; idx < vals.size(); ++idx) {
                    const double x = a.at(idx / b.points), y = b.at(idx % b.points);
                    p1.values.push_back(x);
                    p2.values.push_back(y);
                    p3.values.push_back(e - x - y);
                    f.values.push_back(vals[idx]);
                }
                return t;
            }};
}

Command three_photon_wf(CLI::App& root) {
    auto* app = root.add_subcommand("three-photon-wf", "three-photon out-state on an (x1, x2) plane at fixed x3");
    auto spec = std::make_shared<Spec>(app);
    double *w, *g, *k1, *k2, *k3;
    twg_params(*spec, w, g);
    triple_params(*spec, k1, k2, k3);
    double& x3 = spec->num("x3", "fixed third coordinate", 0.0);
    std::string& method = spec->text("method", "connected-tier evaluation", "residue", {"residue", "quadrature"});
    spec->grids({"x1", "x2"});
    return {app, spec, [=, &x3, &method](const Spec& s) {
                const ps::TWGParams p(*w, *g);
                const ps::twg::Triple k{*k1, *k2, *k3};
                const Grid a = s.grid("x1", "x2"), b = s.grid("x2", "x1");
                const auto m = method_of(method);
                const std::size_t n = a.points * b.points;
                const auto amps = ps::parallel_map<Complex>(n, [&](std::size_t idx) {
                    return ps::twg::three_photon_out_wavefunction(p, k, {a.at(idx / b.points), b.at(idx % b.points), x3}, m)
                        .total();
                });
                Table t;
                auto& c1 = t.add("x1[1/Omega]", "x1");
                auto& c2 = t.add("x2[1/Omega]", "x2");
                auto& re = t.add("Re psi[1]", "psi_re");
                auto& im = t.add("Im psi[1]", "psi_im");
                auto& a2 = t.add("|psi|^2[1]", "psi_abs2");
                for (std::size_t idx = 0; idx < n; ++idx) {
                    c1.values.push_back(a.at(idx / b.points));
                    c2.values.push_back(b.at(idx % b.points));
                    re.values.push_back(amps[idx].real());
                    im.values.push_back(amps[idx].imag());
                    a2.values.push_back(std::norm(amps[idx]));
                }
                return t;
            }};
}

// --- H-type waveguide ----------------------------------------------------------

void hwg_params(Spec& s, double*& omega, double*& v1, double*& v2) {
    omega = &s.num("omega", "atomic level spacing Omega", 1.0);
    v1 = &s.num("vbar1", "even-channel coupling to waveguide 1");
    v2 = &s.num("vbar2", "even-channel coupling to waveguide 2");
}

Command h_single(CLI::App& root) {
    auto* app = root.add_subcommand("h-single", "single-photon channel amplitudes of the H-type waveguide");
    auto spec = std::make_shared<Spec>(app);
    double *w, *v1, *v2;
    hwg_params(*spec, w, v1, v2);
    spec->grids({"k"});
    return {app, spec, [=](const Spec& s) {
                const ps::HWGParams p(*w, *v1, *v2);
                const Grid g = s.grid("k");
                Table t;
                auto& k = t.add("k[Omega]", "k");
                auto& a = t.add("|t11|^2[1]", "t11_abs2");
                auto& b = t.add("|t21|^2[1]", "t21_abs2");
                auto& c = t.add("|t22|^2[1]", "t22_abs2");
                auto& ph = t.add("arg t11[rad]", "t11_phase");
                for (std::size_t i = 0; i < g.points; ++i) {
                    const auto amp = ps::hwg::channel_amplitudes(p, g.at(i));
                    k.values.push_back(g.at(i));
                    a.values.push_back(std::norm(amp.t11));
                    b.values.push_back(std::norm(amp.t21));
                    c.values.push_back(std::norm(amp.t22));
                    ph.values.push_back(std::arg(amp.t11));
                }
                return t;
            }};
}

nlohmann::ordered_json disconnected_json(const ps::ScatteringAmplitudeSet& s) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& term : s.disconnected()) {
        nlohmann::ordered_json j;
        for (const auto& pin : term.pins) j["p" + std::to_string(pin.leg + 1)] = pin.momentum;
        j["weight_re"] = term.weight.real();
        j["weight_im"] = term.weight.imag();
        arr.push_back(j);
    }
    return arr;
}

Command h_two_photon(CLI::App& root) {
    auto* app = root.add_subcommand("h-two-photon", "two-photon S-matrix elements of the H-type waveguide");
    auto spec = std::make_shared<Spec>(app);
    double *w, *v1, *v2;
    hwg_params(*spec, w, v1, v2);
    double& k1 = spec->num("k1", "momentum of the photon incident in waveguide 1");
    double& k2 = spec->num("k2", "momentum of the photon incident in waveguide 2");
    spec->grids({"p1"});
    return {app, spec, [=, &k1, &k2](const Spec& s) {
                const ps::HWGParams p(*w, *v1, *v2);
                const auto sm = ps::hwg::two_photon_s_h(p, k1, k2);
                const Grid g = s.grid("p1");
                const double e = k1 + k2;
                Table t;
                auto& c1 = t.add("p1[Omega]", "p1");
                auto& c2 = t.add("p2[Omega]", "p2");
                const std::array<std::pair<const ps::ScatteringAmplitudeSet*, std::string>, 3> sets{
                    {{&sm.s11, "11"}, {&sm.s12, "12"}, {&sm.s22, "22"}}};
                std::vector<ps::cli::Column*> cols;
                for (const auto& [set, tag] : sets) {
                    cols.push_back(&t.add("Re B" + tag + "[1/Omega]", "b" + tag + "_re"));
                    cols.push_back(&t.add("Im B" + tag + "[1/Omega]", "b" + tag + "_im"));
                }
                for (std::size_t i = 0; i < g.points; ++i) {
                    const std::array<double, 2> q{g.at(i), e - g.at(i)};
                    c1.values.push_back(q[0]);
                    c2.values.push_back(q[1]);
                    for (std::size_t j = 0; j < sets.size(); ++j) {
                        const Complex v = sets[j].first->connected_density(q);
                        cols[2 * j]->values.push_back(v.real());
                        cols[2 * j + 1]->values.push_back(v.imag());
                    }
                }
                for (const auto& [set, tag] : sets) t.extra["disconnected_" + tag] = disconnected_json(*set);
                return t;
            }};
}

Command correlation(CLI::App& root) {
    auto* app = root.add_subcommand("correlation", "second-order correlations |g_ij(x)|^2 of the H-type waveguide");
    auto spec = std::make_shared<Spec>(app);
    double *w, *v1, *v2;
    hwg_params(*spec, w, v1, v2);
    double& e = spec->num("E", "total incident energy");
    double& dk = spec->num("dk", "relative momentum (k1 - k2)/2", 0.0);
    std::string& pair = spec->text("pair", "outgoing channel pair", "all", {"11", "12", "22", "all"});
    spec->grids({"x"});
    return {app, spec, [=, &e, &dk, &pair](const Spec& s) {
                const auto g = ps::hwg::pair_wavefunctions(ps::HWGParams(*w, *v1, *v2), e / 2.0 + dk, e / 2.0 - dk);
                const Grid grid = s.grid("x");
                Table t;
                auto& x = t.add("x[1/Omega]", "x");
                std::vector<std::pair<ps::hwg::Pair, ps::cli::Column*>> cols;
                const std::array<std::pair<ps::hwg::Pair, std::string>, 3> all{
                    {{ps::hwg::Pair::P11, "11"}, {ps::hwg::Pair::P12, "12"}, {ps::hwg::Pair::P22, "22"}}};
                for (const auto& [id, tag] : all)
                    if (pair == "all" || pair == tag) cols.emplace_back(id, &t.add("|g" + tag + "|^2[1]", "g" + tag + "_abs2"));
                for (std::size_t i = 0; i < grid.points; ++i) {
                    x.values.push_back(grid.at(i));
                    for (auto& [id, col] : cols) col->values.push_back(std::norm(g(id, grid.at(i))));
                }
                return t;
            }};
}

// --- lattice oracle ------------------------------------------------------------

Command oracle_bound(CLI::App& parent) {
    auto* app = parent.add_subcommand("bound", "exact diagonalization against the bound-state closed forms");
    auto spec = std::make_shared<Spec>(app);
    double *w, *w0, *j, *v;
    tcra_params(*spec, w, w0, j, v);
    double& l = spec->num("L", "lattice size (odd)", 2001);
    double& fit = spec->num("fit", "sites |x| <= fit enter the slope fit", 20);
    return {app, spec, [=, &l, &fit](const Spec&) {
                const ps::lattice::LatticeModel m(integer_site(l), ps::TCRAParams(*w, *w0, *j, *v));
                const auto r = ps::lattice::bound_state_check(m, integer_site(fit));
                Table t;
                t.scalar = true;
                t.add("out_of_band[1]", "out_of_band").values = {static_cast<double>(r.out_of_band)};
                t.add("lower[energy]", "lower").values = {r.lower_energy};
                t.add("lower_predicted[energy]", "lower_predicted").values = {r.lower_predicted};
                t.add("upper[energy]", "upper").values = {r.upper_energy};
                t.add("upper_predicted[energy]", "upper_predicted").values = {r.upper_predicted};
                t.add("slope_lower[1/a]", "slope_lower").values = {r.lower_slope};
                t.add("slope_lower_predicted[1/a]", "slope_lower_predicted").values = {r.lower_slope_predicted};
                t.add("slope_upper[1/a]", "slope_upper").values = {r.upper_slope};
                t.add("slope_upper_predicted[1/a]", "slope_upper_predicted").values = {r.upper_slope_predicted};
                t.add("upper_alternates[1]", "upper_alternates").values = {r.upper_alternates ? 1.0 : 0.0};
                t.add("lower_same_sign[1]", "lower_same_sign").values = {r.lower_same_sign ? 1.0 : 0.0};
                if (!r.warning.empty()) t.extra["warning"] = r.warning;
                return t;
            }};
}

Command oracle_scatter(CLI::App& parent) {
    auto* app = parent.add_subcommand("scatter", "single-photon wavepacket on the finite lattice");
    auto spec = std::make_shared<Spec>(app);
    double *w, *w0, *j, *v;
    tcra_params(*spec, w, w0, j, v);
    double& v2 = spec->num("V2", "coupling to a second chain; > 0 selects the H-type array", 0.0);
    double& l = spec->num("L", "lattice size (odd)", 801);
    double& k0 = spec->num("k0", "carrier momentum", ps::kPi / 2.0);
    double& width = spec->num("width", "packet width in sites", 40.0);
    return {app, spec, [=, &v2, &l, &k0, &width](const Spec&) {
                ps::lattice::WavepacketOptions o;
                o.k0 = k0;
                o.width = width;
                Table t;
                t.scalar = true;
                const double eps = *w0 - 2.0 * *j * std::cos(k0);
                if (v2 > 0.0) {
                    const ps::lattice::HCRAParams hp{*w, *w0, *j, *v, v2};
                    const auto r = ps::lattice::wavepacket_scatter(ps::lattice::LatticeModel(integer_site(l), hp), o);
                    const auto a = ps::hwg::channel_amplitudes(hp.linearized(k0), eps);
                    t.add("waveguide1[1]", "waveguide1").values = {r.waveguide1};
                    t.add("waveguide2[1]", "waveguide2").values = {r.waveguide2};
                    t.add("t11_abs2_predicted[1]", "t11_abs2_predicted").values = {std::norm(a.t11)};
                    t.add("t21_abs2_predicted[1]", "t21_abs2_predicted").values = {std::norm(a.t21)};
                    t.add("atom[1]", "atom").values = {r.atom};
                    t.add("norm_error[1]", "norm_error").values = {r.norm_error};
                    t.add("time[1/J]", "time").values = {r.time};
                    return t;
                }
                const ps::TCRAParams p(*w, *w0, *j, *v);
                const auto r = ps::lattice::wavepacket_scatter(ps::lattice::LatticeModel(integer_site(l), p), o);
                const Complex refl = ps::tcra::reflection_amplitude(p, k0);
                t.add("transmission[1]", "transmission").values = {r.transmission};
                t.add("reflection[1]", "reflection").values = {r.reflection};
                t.add("transmission_predicted[1]", "transmission_predicted").values = {std::norm(1.0 + refl)};
                t.add("reflection_predicted[1]", "reflection_predicted").values = {std::norm(refl)};
                t.add("atom[1]", "atom").values = {r.atom};
                t.add("norm_error[1]", "norm_error").values = {r.norm_error};
                t.add("time[1/J]", "time").values = {r.time};
                return t;
            }};
}

Command oracle_pair(CLI::App& parent) {
    auto* app = parent.add_subcommand("pair", "two-excitation dynamics on the finite lattice");
    auto spec = std::make_shared<Spec>(app);
    double *w, *w0, *j, *v;
    tcra_params(*spec, w, w0, j, v);
    double& l = spec->num("L", "lattice size (odd, <= 401)", 401);
    double& k1 = spec->num("k1", "carrier momentum 1", ps::kPi / 2.0);
    double& k2 = spec->num("k2", "carrier momentum 2", ps::kPi / 2.0);
    double& width = spec->num("width", "packet width in sites", 16.0);
    return {app, spec, [=, &l, &k1, &k2, &width](const Spec&) {
                ps::lattice::PairOptions o;
                o.k1 = k1;
                o.k2 = k2;
                o.width = width;
                const ps::lattice::LatticeModel m(integer_site(l), ps::TCRAParams(*w, *w0, *j, *v));
                const auto r = ps::lattice::two_excitation_check(m, o);
                Table t;
                auto& d = t.add("d[a]", "d");
                auto& rho = t.add("density[1]", "density");
                auto& free = t.add("free_density[1]", "free_density");
                auto& ratio = t.add("ratio[1]", "ratio");
                for (std::size_t i = 0; i < r.separation.size(); ++i) {
                    d.values.push_back(static_cast<double>(r.separation[i]));
                    rho.values.push_back(r.density[i]);
                    free.values.push_back(r.free_density[i]);
                    ratio.values.push_back(r.density[i] / r.free_density[i]);
                }
                t.extra["indicator"] = r.indicator;
                t.extra["transmitted"] = r.transmitted;
                t.extra["norm_error"] = r.norm_error;
                t.extra["time"] = r.time;
                return t;
            }};
}

// --- config and errors -----------------------------------------------------------

/// Reads `key = value` lines and returns them as `--key value` arguments.
std::vector<std::string> config_arguments(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::vector<std::string> out;
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string key = eq == std::string::npos ? "" : trim(line.substr(0, eq));
        if (key.empty() || key.find(' ') != std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        out.push_back("--" + key);
        out.push_back(trim(line.substr(eq + 1)));
    }
    return out;
}

void emit_error(const std::string& kind, const std::string& message, const std::string& diagnostics = {}) {
    nlohmann::ordered_json j;
    j["error"] = kind;
    j["message"] = message;
    if (!diagnostics.empty()) j["diagnostics"] = diagnostics;
    std::cerr << j.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form multi-photon scattering in coupled-resonator arrays", "photon-scatter"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    std::string output_path;
    std::string format = "csv";
    int precision = 12;
    app.add_option("--output,-o", output_path, "output file (default stdout)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--precision", precision, "significant digits")->check(CLI::Range(1, 17))->capture_default_str();
    app.fallthrough();

    std::vector<Command> commands{t_reflect(app),    bound_states(app),  bound_wavefunction(app), wg_transmit(app),
                                  two_photon_wf(app), fluorescence2(app), fluorescence3(app),      three_photon_wf(app),
                                  h_single(app),      h_two_photon(app),  correlation(app)};
    auto* oracle = app.add_subcommand("oracle", "finite-lattice oracles");
    oracle->require_subcommand(1);
    commands.push_back(oracle_bound(*oracle));
    commands.push_back(oracle_scatter(*oracle));
    commands.push_back(oracle_pair(*oracle));

    auto* validate = app.add_subcommand("validate", "run the acceptance suite");
    std::vector<int> criteria;
    validate->add_option("--criteria", criteria, "criterion numbers (default all)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->check(CLI::Range(1, ps::validate::kCriterionCount));

    // Config entries go last so that they take precedence over flags.
    try {
        std::vector<std::string> ordered;
        std::vector<std::string> tail;
        for (int i = 1; i < argc; ++i) {
            const std::string a = argv[i];
            if (a == "--config") {
                if (i + 1 >= argc) throw ConfigError("--config needs a path");
                const auto extra = config_arguments(argv[++i]);
                tail.insert(tail.end(), extra.begin(), extra.end());
            } else if (a.rfind("--config=", 0) == 0) {
                const auto extra = config_arguments(a.substr(9));
                tail.insert(tail.end(), extra.begin(), extra.end());
            } else {
                ordered.push_back(a);
            }
        }
        ordered.insert(ordered.end(), tail.begin(), tail.end());
        std::reverse(ordered.begin(), ordered.end());
        app.parse(std::move(ordered));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("config_error", e.what());
        return 2;
    } catch (const ConfigError& e) {
        emit_error("config_error", e.what());
        return 2;
    }

    ps::cli::OutputOptions out_opts;
    out_opts.format = format == "json" ? ps::cli::Format::Json : ps::cli::Format::Csv;
    out_opts.precision = precision;

    try {
        std::ostringstream buffer;
        if (validate->parsed()) {
            const auto results = ps::validate::run_acceptance(criteria);
            bool ok = true;
            if (out_opts.format == ps::cli::Format::Json) {
                nlohmann::ordered_json j;
                j["criteria"] = nlohmann::ordered_json::array();
                for (const auto& r : results) {
                    j["criteria"].push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
                    ok = ok && r.passed;
                }
                j["passed"] = ok;
                buffer << j.dump() << '\n';
            } else {
                for (const auto& r : results) {
                    buffer << ps::validate::format_result(r) << '\n';
                    ok = ok && r.passed;
                }
            }
            if (output_path.empty()) {
                std::cout << buffer.str();
            } else {
                std::ofstream(output_path, std::ios::binary) << buffer.str();
            }
            if (!ok) {
                emit_error("tolerance_error", "acceptance suite reported failures");
                return 3;
            }
            return 0;
        }

        for (const auto& c : commands) {
            if (!c.app->parsed()) continue;
            c.spec->check();
            Table t = c.run(*c.spec);
            t.parameters = c.spec->parameters();
            ps::cli::write_table(buffer, t, out_opts);
            if (output_path.empty()) {
                std::cout << buffer.str();
            } else {
                std::ofstream file(output_path, std::ios::binary);
                if (!file) throw ConfigError("cannot open output file '" + output_path + "'");
                file << buffer.str();
            }
            return 0;
        }
        throw ConfigError("no subcommand selected");
    } catch (const ConfigError& e) {
        emit_error("config_error", e.what());
        return 2;
    } catch (const ps::DomainError& e) {
        emit_error("domain_error", e.what());
        return 2;
    } catch (const ps::ContractViolation& e) {
        emit_error("contract_violation", e.what());
        return 2;
    } catch (const ps::ToleranceError& e) {
        emit_error("tolerance_error", e.what(), e.diagnostics());
        return 3;
    } catch (const std::exception& e) {
        emit_error("internal_error", e.what());
        return 1;
    }
}
