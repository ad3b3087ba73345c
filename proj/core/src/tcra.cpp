#include "photon_scatter/tcra.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace photon_scatter::tcra {

namespace {

constexpr double kEdgeGuard = 1e-9;

// h(y) = c + y − Γ/√(y(4J + y)), y = distance from the band edge. Both branches
// of the bound-state condition reduce to h(y) = 0 with branch-specific c, and h
// is strictly increasing on y > 0.
struct EdgeFunction {
    double c;
    double gamma;
    double hopping;

    double s(double y) const { return std::sqrt(y * (4.0 * hopping + y)); }
    double operator()(double y) const { return c + y - gamma / s(y); }
    double derivative(double y) const {
        const double sy = s(y);
        return 1.0 + gamma * (2.0 * hopping + y) / (sy * sy * sy);
    }
};

double solve_edge_distance(const EdgeFunction& h) {
    double lo = 1e-3 * h.hopping;
    for (int i = 0; i < 4000 && !(h(lo) < 0.0); ++i) lo *= 0.5;
    if (!(h(lo) < 0.0)) {
        std::ostringstream diag;
        diag << "c=" << h.c << " gamma=" << h.gamma << " lo=" << lo;
        throw ToleranceError("bound-state bracket: no sign change near the band edge", diag.str());
    }
    double hi = std::max(h.hopping, std::abs(h.c)) + 10.0 * h.gamma;
    for (int i = 0; i < 200 && !(h(hi) > 0.0); ++i) hi *= 2.0;
    if (!(h(hi) > 0.0)) {
        std::ostringstream diag;
        diag << "c=" << h.c << " gamma=" << h.gamma << " hi=" << hi;
        throw ToleranceError("bound-state bracket: no sign change far from the band", diag.str());
    }

    for (int i = 0; i < 400; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (h(mid) < 0.0) lo = mid; else hi = mid;
    }
    double y = 0.5 * (lo + hi);
    // Newton polish, kept inside the final bracket.
    for (int i = 0; i < 8; ++i) {
        const double step = h(y) / h.derivative(y);
        const double next = y - step;
        if (!(next > 0.0) || !std::isfinite(next)) break;
        y = next;
        if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * y) break;
    }
    return y;
}

// 1/(|u| + √(u² − 1)), the decaying root of κ² − 2|u|κ + 1 = 0.
double decaying_root(double u) {
    const double a = std::abs(u);
    return 1.0 / (a + std::sqrt((a - 1.0) * (a + 1.0)));
}

BoundState make_state(const TCRAParams& p, double energy, Branch branch) {
    const double d = energy - p.omega_cavity();
    const double j2 = 2.0 * p.hopping();
    const double kappa = branch == Branch::Upper ? kappa_minus(p, energy) : kappa_plus(p, energy);
    if (!(kappa > 0.0 && kappa < 1.0)) {
        std::ostringstream diag;
        diag << "energy=" << energy << " kappa=" << kappa;
        throw ToleranceError("bound state has no decaying profile", diag.str());
    }
    BoundState b{};
    b.energy = energy;
    b.branch = branch;
    b.decay_log = std::log(kappa);
    b.amplitude = p.coupling() / std::sqrt((d - j2) * (d + j2));
    b.sign_alternating = branch == Branch::Upper;
    return b;
}

}  // namespace

Complex reflection_amplitude(const TCRAParams& p, double k) {
    const double s = std::sin(k);
    if (std::abs(s) < kEdgeGuard) throw DomainError("reflection amplitude is undefined at the band edge");
    const double eps = dispersion_eval(CosineBand{p.omega_cavity(), p.hopping()}, k);
    const Complex ig = kI * p.gamma();
    return -ig / (2.0 * p.hopping() * s * (eps - p.omega_atom()) + ig);
}

Complex transmission_amplitude(const TCRAParams& p, double k) {
    return 1.0 + reflection_amplitude(p, k);
}

ScatteringAmplitudeSet single_photon_s_matrix(const TCRAParams& p, double k) {
    const Complex r = reflection_amplitude(p, k);
    const double energy = dispersion_eval(CosineBand{p.omega_cavity(), p.hopping()}, k);
    ScatteringAmplitudeSet set(1, energy);
    set.add_disconnected({{0, k}}, 1.0 + r);
    set.add_disconnected({{0, -k}}, r);
    return set;
}

SelfEnergy self_energy(const TCRAParams& p, double omega) {
    const double d = omega - p.omega_cavity();
    const double j2 = 2.0 * p.hopping();
    const double gap = (std::abs(d) - j2);
    if (std::abs(gap) <= 1e-12 * std::max(1.0, j2)) throw DomainError("self-energy is singular at the band edge");
    if (gap < 0.0) {
        const double dos = 2.0 / std::sqrt((j2 - d) * (j2 + d));
        return {0.0, p.gamma() * dos / 2.0, dos};
    }
    const double sign = d > 0.0 ? 1.0 : -1.0;
    return {-p.gamma() * sign / std::sqrt((d - j2) * (d + j2)), 0.0, 0.0};
}

double kappa_plus(const TCRAParams& p, double energy) {
    const double u = (energy - p.omega_cavity()) / (2.0 * p.hopping());
    if (std::abs(u) < 1.0) throw DomainError("kappa is defined outside the band only");
    if (u < -1.0) return decaying_root(u);
    return -std::sqrt(u * u - 1.0) - u;
}

double kappa_minus(const TCRAParams& p, double energy) {
    const double u = (energy - p.omega_cavity()) / (2.0 * p.hopping());
    if (std::abs(u) < 1.0) throw DomainError("kappa is defined outside the band only");
    if (u > 1.0) return decaying_root(u);
    return -std::sqrt(u * u - 1.0) + u;
}

double BoundState::kappa() const { return std::exp(decay_log); }

double bound_state_residual(const TCRAParams& p, double energy) {
    const double d = energy - p.omega_cavity();
    const double j2 = 2.0 * p.hopping();
    if (std::abs(d) <= j2) throw DomainError("bound-state condition is defined outside the band only");
    const double sign = d > 0.0 ? 1.0 : -1.0;
    return energy - p.omega_atom() - p.gamma() * sign / std::sqrt((std::abs(d) - j2) * (std::abs(d) + j2));
}

BoundStatePair bound_state_energies(const TCRAParams& p) {
    if (!(p.gamma() > 0.0)) throw ContractViolation("bound states require Gamma > 0");
    const double j2 = 2.0 * p.hopping();
    const EdgeFunction upper{p.band_top() - p.omega_atom(), p.gamma(), p.hopping()};
    const EdgeFunction lower{p.omega_atom() - p.band_bottom(), p.gamma(), p.hopping()};
    const double y_up = solve_edge_distance(upper);
    const double y_lo = solve_edge_distance(lower);
    (void)j2;
    return {make_state(p, p.band_bottom() - y_lo, Branch::Lower),
            make_state(p, p.band_top() + y_up, Branch::Upper)};
}

double bound_state_wavefunction(const BoundState& b, const TCRAParams& p, long x) {
    const double d = b.energy - p.omega_cavity();
    const bool above = d > 2.0 * p.hopping();
    const bool below = d < -2.0 * p.hopping();
    if ((b.branch == Branch::Upper && !above) || (b.branch == Branch::Lower && !below))
        throw ContractViolation("bound-state branch does not match its energy");
    const double scale = std::max({1.0, std::abs(b.energy), p.gamma()});
    if (std::abs(bound_state_residual(p, b.energy)) > 1e-8 * scale)
        throw ContractViolation("bound state was not produced for these parameters");
    const long ax = x < 0 ? -x : x;
    const double sign = (b.sign_alternating && (ax % 2 == 1)) ? -1.0 : 1.0;
    return sign * b.amplitude * std::exp(static_cast<double>(ax) * b.decay_log);
}

}  // namespace photon_scatter::tcra
