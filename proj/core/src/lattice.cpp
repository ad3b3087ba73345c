#include "photon_scatter/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "photon_scatter/tcra.hpp"

namespace photon_scatter::lattice {

double HCRAParams::group_velocity(double k) const { return 2.0 * hopping * std::abs(std::sin(k)); }

HWGParams HCRAParams::linearized(double k) const {
    const double v = group_velocity(k);
    if (!(v > 0.0)) throw DomainError("linearization is undefined at the band edge");
    const double s = std::sqrt(2.0 / v);
    return HWGParams(omega_atom, s * coupling1, s * coupling2);
}

LatticeModel::LatticeModel(long size, const TCRAParams& params, Boundary boundary)
    : size_(size), boundary_(boundary), params_(params) {
    if (size < 3 || size % 2 == 0) throw ContractViolation("lattice size must be odd and at least 3");
}

LatticeModel::LatticeModel(long size, const HCRAParams& params, Boundary boundary)
    : size_(size), boundary_(boundary), params_(params) {
    if (size < 3 || size % 2 == 0) throw ContractViolation("lattice size must be odd and at least 3");
    if (!(params.hopping > 0.0)) throw ContractViolation("hopping J must be positive");
}

const TCRAParams& LatticeModel::tcra() const {
    if (h_type()) throw ContractViolation("model is H-type");
    return std::get<TCRAParams>(params_);
}

const HCRAParams& LatticeModel::hcra() const {
    if (!h_type()) throw ContractViolation("model is T-type");
    return std::get<HCRAParams>(params_);
}

double LatticeModel::omega_atom() const { return h_type() ? hcra().omega_atom : tcra().omega_atom(); }
double LatticeModel::omega_cavity() const { return h_type() ? hcra().omega_cavity : tcra().omega_cavity(); }
double LatticeModel::hopping() const { return h_type() ? hcra().hopping : tcra().hopping(); }

double LatticeModel::coupling(int chain) const {
    if (!h_type()) return chain == 0 ? tcra().coupling() : 0.0;
    return chain == 0 ? hcra().coupling1 : hcra().coupling2;
}

long LatticeModel::site_index(int chain, long x) const {
    if (x < -half() || x > half() || chain < 0 || chain >= chains())
        throw ContractViolation("site outside the lattice");
    return chain * size_ + (x + half());
}

Eigen::MatrixXd build_single_excitation(const LatticeModel& m) {
    const long n = m.dimension();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    const double j = m.hopping();
    for (int c = 0; c < m.chains(); ++c) {
        for (long x = -m.half(); x <= m.half(); ++x) {
            const long a = m.site_index(c, x);
            h(a, a) = m.omega_cavity();
            if (x < m.half()) {
                const long b = m.site_index(c, x + 1);
                h(a, b) = h(b, a) = -j;
            }
        }
        if (m.boundary() == Boundary::Ring) {
            const long a = m.site_index(c, -m.half()), b = m.site_index(c, m.half());
            h(a, b) = h(b, a) = -j;
        }
        const long s0 = m.site_index(c, 0);
        h(s0, m.atom_index()) = h(m.atom_index(), s0) = m.coupling(c);
    }
    h(m.atom_index(), m.atom_index()) = m.omega_atom();
    return h;
}

namespace {

double fit_slope(const Eigen::VectorXd& v, const LatticeModel& m, long fit_range) {
    // Least squares of ln|ψ(x)| on |x| over both sides, 1 ≤ |x| ≤ fit_range.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (long x = -fit_range; x <= fit_range; ++x) {
        if (x == 0) continue;
        const double y = std::log(std::abs(v(m.site_index(0, x))));
        const double ax = static_cast<double>(std::abs(x));
        sx += ax;
        sy += y;
        sxx += ax * ax;
        sxy += ax * y;
        ++count;
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace

BoundStateReport bound_state_check(const LatticeModel& m, long fit_range) {
    const TCRAParams& p = m.tcra();
    if (fit_range < 2 || fit_range >= m.half()) throw ContractViolation("fit range must lie inside the lattice");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_single_excitation(m));
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double bottom = p.band_bottom(), top = p.band_top();
    const double margin = 1e-9;

    BoundStateReport r;
    for (long i = 0; i < ev.size(); ++i)
        if (ev(i) < bottom - margin || ev(i) > top + margin) ++r.out_of_band;

    const auto predicted = tcra::bound_state_energies(p);
    r.lower_predicted = predicted.lower.energy;
    r.upper_predicted = predicted.upper.energy;
    r.lower_slope_predicted = predicted.lower.decay_log;
    r.upper_slope_predicted = predicted.upper.decay_log;

    const long last = ev.size() - 1;
    r.lower_energy = ev(0);
    r.upper_energy = ev(last);
    if (!(ev(0) < bottom - margin) || !(ev(last) > top + margin)) {
        std::ostringstream os;
        os << "only " << r.out_of_band << " eigenvalue(s) outside the band at L=" << m.size()
           << "; bound states not resolved";
        r.warning = os.str();
        return r;
    }
    const Eigen::VectorXd lower = es.eigenvectors().col(0);
    const Eigen::VectorXd upper = es.eigenvectors().col(last);
    r.lower_slope = fit_slope(lower, m, fit_range);
    r.upper_slope = fit_slope(upper, m, fit_range);

    r.upper_alternates = true;
    r.lower_same_sign = true;
    for (long x = -fit_range; x < fit_range; ++x) {
        const double a = upper(m.site_index(0, x)), b = upper(m.site_index(0, x + 1));
        if (!(a * b < 0.0)) r.upper_alternates = false;
        const double c = lower(m.site_index(0, x)), d = lower(m.site_index(0, x + 1));
        if (!(c * d > 0.0)) r.lower_same_sign = false;
    }
    return r;
}

namespace {

Eigen::VectorXcd gaussian_packet(const LatticeModel& m, int chain, double center, double width, double k0) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(m.dimension());
    for (long x = -m.half(); x <= m.half(); ++x) {
        const double d = (x - center) / width;
        v(m.site_index(chain, x)) = std::exp(-0.25 * d * d) * std::exp(kI * (k0 * x));
    }
    return v;
}

double guard_probability(const LatticeModel& m, const Eigen::VectorXcd& psi, double fraction) {
    const double edge = m.half() - fraction * m.size();
    double g = 0.0;
    for (int c = 0; c < m.chains(); ++c)
        for (long x = -m.half(); x <= m.half(); ++x)
            if (std::abs(static_cast<double>(x)) > edge) g += std::norm(psi(m.site_index(c, x)));
    return g;
}

void reject_if_guarded(double guard, double tolerance, const std::string& where) {
    if (guard > tolerance) {
        std::ostringstream diag;
        diag << "guard_probability=" << guard << " tolerance=" << tolerance;
        throw ToleranceError(where + ": packet reached the boundary guard zone before measurement", diag.str());
    }
}

}  // namespace

WavepacketResult wavepacket_scatter(const LatticeModel& m, const WavepacketOptions& opts) {
    if (m.boundary() != Boundary::Open) throw ContractViolation("wavepacket runs need open boundaries");
    const double vg = 2.0 * m.hopping() * std::abs(std::sin(opts.k0));
    if (std::abs(std::sin(opts.k0)) < 0.05) throw DomainError("k0 too close to a band edge");
    if (opts.width < 40.0 || m.size() < 20.0 * opts.width)
        throw ContractViolation("packet must satisfy width >= 40 and L >= 20 width");

    const double start = opts.start.value_or(
        -std::min(0.25 * m.size(), m.half() - opts.guard_fraction * m.size() - 4.5 * opts.width));
    const double duration = opts.duration.value_or((std::abs(start) + 3.0 * opts.width) / vg);

    Eigen::VectorXcd psi0 = gaussian_packet(m, 0, start, opts.width, std::abs(opts.k0));
    if (m.h_type()) psi0 += gaussian_packet(m, 0, -start, opts.width, -std::abs(opts.k0));
    psi0.normalize();
    reject_if_guarded(guard_probability(m, psi0, opts.guard_fraction), opts.guard_tolerance, "initial state");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_single_excitation(m));
    const Eigen::MatrixXd& u = es.eigenvectors();
    Eigen::VectorXcd coeff = u.transpose().cast<Complex>() * psi0;
    for (long i = 0; i < coeff.size(); ++i) coeff(i) *= std::exp(-kI * (es.eigenvalues()(i) * duration));
    const Eigen::VectorXcd psi = u.cast<Complex>() * coeff;

    WavepacketResult r;
    r.time = duration;
    r.norm_error = std::abs(psi.squaredNorm() - 1.0);
    r.guard = guard_probability(m, psi, opts.guard_fraction);
    reject_if_guarded(r.guard, opts.guard_tolerance, "wavepacket_scatter");
    for (long x = -m.half(); x <= m.half(); ++x) {
        const double w = std::norm(psi(m.site_index(0, x)));
        if (x > 0) r.transmission += w;
        if (x < 0) r.reflection += w;
        r.waveguide1 += w;
        if (m.h_type()) r.waveguide2 += std::norm(psi(m.site_index(1, x)));
    }
    r.atom = std::norm(psi(m.atom_index()));
    return r;
}

// ---------------------------------------------------------------------------
// Two-excitation sector

namespace {

struct PairBasis {
    long n;  // sites
    long pairs() const { return n * (n + 1) / 2; }
    long pair(long i, long j) const {
        if (i > j) std::swap(i, j);
        return i * n - i * (i - 1) / 2 + (j - i);
    }
    long atom(long i) const { return pairs() + i; }
    long dimension() const { return pairs() + n; }
};

}  // namespace

Eigen::SparseMatrix<double> build_two_excitation(const LatticeModel& m) {
    if (m.h_type() || m.boundary() != Boundary::Open)
        throw ContractViolation("two-excitation sector is built for open T-type lattices");
    const PairBasis b{m.size()};
    const long n = b.n;
    const long c = m.half();
    const double w0 = m.omega_cavity(), om = m.omega_atom(), j = m.hopping(), v = m.coupling(0);
    const double r2 = std::sqrt(2.0);

    std::vector<Eigen::Triplet<double>> t;
    t.reserve(static_cast<std::size_t>(b.dimension()) * 6);
    auto add_move = [&](long col, long i, long other, bool diagonal) {
        for (long s : {i - 1, i + 1}) {
            if (s < 0 || s >= n) continue;
            const double f = (diagonal || s == other) ? r2 : 1.0;
            t.emplace_back(b.pair(s, other), col, -j * f);
        }
    };
    for (long i = 0; i < n; ++i) {
        for (long k = i; k < n; ++k) {
            const long col = b.pair(i, k);
            t.emplace_back(col, col, 2.0 * w0);
            if (i == k) {
                add_move(col, i, i, true);
                if (i == c) t.emplace_back(b.atom(c), col, v * r2);
            } else {
                add_move(col, i, k, false);
                add_move(col, k, i, false);
                if (i == c) t.emplace_back(b.atom(k), col, v);
                if (k == c) t.emplace_back(b.atom(i), col, v);
            }
        }
    }
    for (long i = 0; i < n; ++i) {
        const long col = b.atom(i);
        t.emplace_back(col, col, w0 + om);
        for (long s : {i - 1, i + 1})
            if (s >= 0 && s < n) t.emplace_back(b.atom(s), col, -j);
        t.emplace_back(b.pair(i, c), col, i == c ? v * r2 : v);
    }
    Eigen::SparseMatrix<double> h(b.dimension(), b.dimension());
    h.setFromTriplets(t.begin(), t.end());
    return h;
}

namespace {

std::vector<double> relative_density(const PairBasis& b, const Eigen::VectorXcd& psi, long center, long max_d,
                                     double* transmitted) {
    std::vector<double> rho(max_d + 1, 0.0);
    double tr = 0.0;
    for (long i = center + 1; i < b.n; ++i) {
        for (long k = i; k < b.n; ++k) {
            const double w = std::norm(psi(b.pair(i, k)));
            tr += w;
            const long d = k - i;
            if (d <= max_d) rho[d] += d == 0 ? w : w / 2.0;
        }
    }
    if (transmitted) *transmitted = tr;
    return rho;
}

}  // namespace

PairResult two_excitation_check(const LatticeModel& m, const PairOptions& opts) {
    if (m.size() > 401) throw ContractViolation("two-excitation runs are limited to L <= 401");
    const PairBasis b{m.size()};
    const long c = m.half();
    const double j = m.hopping();
    const double vg = 2.0 * j * std::min(std::abs(std::sin(opts.k1)), std::abs(std::sin(opts.k2)));
    if (vg < 0.1 * j) throw DomainError("pair momenta too close to a band edge");
    const double start = opts.start.value_or(
        -std::min(0.225 * m.size(), m.half() - opts.guard_fraction * m.size() - 4.5 * opts.width));
    const double duration = opts.duration.value_or((std::abs(start) + 3.0 * opts.width) / vg);
    if (opts.plateau_end <= opts.plateau_begin || opts.plateau_begin < 1)
        throw ContractViolation("invalid plateau range");

    auto packet = [&](double k) {
        std::vector<Complex> f(b.n);
        for (long i = 0; i < b.n; ++i) {
            const double x = static_cast<double>(i - c);
            const double d = (x - start) / opts.width;
            f[i] = std::exp(-0.25 * d * d) * std::exp(kI * (k * x));
        }
        return f;
    };
    const auto f1 = packet(opts.k1), f2 = packet(opts.k2);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(b.dimension());
    for (long i = 0; i < b.n; ++i) {
        psi0(b.pair(i, i)) = std::sqrt(2.0) * f1[i] * f2[i];
        for (long k = i + 1; k < b.n; ++k) psi0(b.pair(i, k)) = f1[i] * f2[k] + f1[k] * f2[i];
    }
    psi0.normalize();

    auto guard_of = [&](const Eigen::VectorXcd& psi) {
        const double edge = c - opts.guard_fraction * m.size();
        double g = 0.0;
        for (long i = 0; i < b.n; ++i) {
            const bool gi = std::abs(static_cast<double>(i - c)) > edge;
            for (long k = i; k < b.n; ++k)
                if (gi || std::abs(static_cast<double>(k - c)) > edge) g += std::norm(psi(b.pair(i, k)));
            if (gi) g += std::norm(psi(b.atom(i)));
        }
        return g;
    };
    reject_if_guarded(guard_of(psi0), opts.guard_tolerance, "initial pair state");

    auto evolve = [&](const LatticeModel& model) {
        const auto h = build_two_excitation(model);
        const auto [lo, hi] = spectral_bounds(h);
        return chebyshev_propagate(h, psi0, duration, lo, hi);
    };
    const Eigen::VectorXcd psi = evolve(m);
    const TCRAParams& p = m.tcra();
    const LatticeModel free(m.size(), TCRAParams(p.omega_atom(), p.omega_cavity(), p.hopping(), 0.0));
    const Eigen::VectorXcd psi_free = evolve(free);

    PairResult r;
    r.time = duration;
    r.norm_error = std::max(std::abs(psi.squaredNorm() - 1.0), std::abs(psi_free.squaredNorm() - 1.0));
    r.guard = std::max(guard_of(psi), guard_of(psi_free));
    reject_if_guarded(r.guard, opts.guard_tolerance, "two_excitation_check");

    const long max_d = opts.plateau_end;
    r.density = relative_density(b, psi, c, max_d, &r.transmitted);
    r.free_density = relative_density(b, psi_free, c, max_d, nullptr);
    r.separation.resize(max_d + 1);
    for (long d = 0; d <= max_d; ++d) r.separation[d] = d;

    double plateau = 0.0;
    for (long d = opts.plateau_begin; d <= opts.plateau_end; ++d) plateau += r.density[d] / r.free_density[d];
    plateau /= static_cast<double>(opts.plateau_end - opts.plateau_begin + 1);
    r.indicator = (r.density[0] / r.free_density[0]) / plateau;
    return r;
}

}  // namespace photon_scatter::lattice
