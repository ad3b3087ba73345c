#include "photon_scatter/three_photon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "photon_scatter/parallel.hpp"
#include "photon_scatter/twg.hpp"

namespace photon_scatter::twg {

namespace {

constexpr std::array<std::array<int, 3>, 6> kPerms{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

// Generic shell direction (components sum to zero).
constexpr std::array<double, 3> kCircleDirection{1.0, -0.3819660112501051, -0.6180339887498949};

void require_shell(const Triple& k, const Triple& p) {
    const double e = k[0] + k[1] + k[2];
    if (std::abs(e - (p[0] + p[1] + p[2])) > 1e-9 * std::max(1.0, std::abs(e)))
        throw ContractViolation("three-photon T evaluated off the energy shell");
}

template <class W, class Wp>
Complex factorized_sum(const W& w, const Wp& wp, Complex alpha) {
    Complex total{};
    for (int a = 0; a < 3; ++a) {
        for (int c = 0; c < 3; ++c) {
            if (a == c) continue;
            const int b = 3 - a - c;
            const Complex wa = w[a];
            const Complex wc = w[c];
            const Complex wab = wa + Complex(w[b]);
            Complex sb{}, sc{}, sbc{};
            for (int j = 0; j < 3; ++j) {
                const Complex pj = wp[j];
                const Complex bj = 1.0 / ((pj - wa) * (wab - pj - alpha));
                const Complex cj = 1.0 / ((pj - wc) * (pj - alpha));
                sb += bj;
                sc += cj;
                sbc += bj * cj;
            }
            total += (sb * sc - sbc) / (wa - alpha);
        }
    }
    return total;
}

// ∫ du e^{iuX}/((u − z1)(u − z2)) along a contour that has z1 above it iff
// above1 (same for z2). Closed upward for X ≥ 0, downward otherwise.
Complex pole_pair_fourier(double x, Complex z1, bool above1, Complex z2, bool above2) {
    const Complex r1 = std::exp(kI * z1 * x) / (z1 - z2);
    const Complex r2 = std::exp(kI * z2 * x) / (z2 - z1);
    Complex acc{};
    if (x >= 0.0) {
        if (above1) acc += r1;
        if (above2) acc += r2;
        return 2.0 * kPi * kI * acc;
    }
    if (!above1) acc += r1;
    if (!above2) acc += r2;
    return -2.0 * kPi * kI * acc;
}

// Contour shift per outgoing leg used to place the real poles; any shift with
// zero sum gives the same total.
constexpr std::array<double, 3> kContourShift{1.0, 1.0, -2.0};

bool pole_above(Complex z, int slot) {
    if (z.imag() != 0.0) return z.imag() > 0.0;
    return kContourShift[slot] < 0.0;
}

Complex residue_fourier(const Triple& k, const Triple& x, Complex alpha) {
    const double e = k[0] + k[1] + k[2];
    Complex total{};
    for (const auto& perm : kPerms) {
        const Complex w0 = k[perm[0]], w1 = k[perm[1]], w2 = k[perm[2]];
        for (const auto& q : kPerms) {
            {
                const int su = q[0], sv = q[2], sd = q[1];
                const double X = x[su] - x[sd], Y = x[sv] - x[sd];
                const Complex u1 = w0, u2 = w0 + w1 - alpha;
                const Complex v1 = w2, v2 = alpha;
                const Complex g = -pole_pair_fourier(X, u1, pole_above(u1, su), u2, pole_above(u2, su));
                const Complex h = pole_pair_fourier(Y, v1, pole_above(v1, sv), v2, pole_above(v2, sv));
                total += std::exp(kI * (e * x[sd])) * g * h / (w0 - alpha);
            }
            {
                const int su = q[1], sv = q[2], sd = q[0];
                const double X = x[su] - x[sd], Y = x[sv] - x[sd];
                const Complex u1 = w1, u2 = alpha;
                const Complex v1 = w2, v2 = e - w1 - alpha;
                const Complex g = pole_pair_fourier(X, u1, pole_above(u1, su), u2, pole_above(u2, su));
                const Complex h = -pole_pair_fourier(Y, v1, pole_above(v1, sv), v2, pole_above(v2, sv));
                total += std::exp(kI * (e * x[sd])) * g * h / (w2 - alpha);
            }
            {
                const int su = q[0], sv = q[1], sd = q[2];
                const double X = x[su] - x[sd], Y = x[sv] - x[sd];
                const Complex u1 = w0, u2 = alpha;
                const Complex v1 = w1, v2 = w1 + w2 - alpha;
                const Complex g = pole_pair_fourier(X, u1, pole_above(u1, su), u2, pole_above(u2, su));
                const Complex h = -pole_pair_fourier(Y, v1, pole_above(v1, sv), v2, pole_above(v2, sv));
                total += std::exp(kI * (e * x[sd])) * g * h / (w1 - alpha);
            }
        }
    }
    return total;
}

Complex windowed_integral(const ThreePhotonConnectedT& t, const Triple& x, double half, const QuadratureOptions& opts) {
    using boost::math::quadrature::gauss_kronrod;
    const double c = t.total_energy() / 3.0;
    double worst_error = 0.0;
    auto inner = [&](double q1) {
        auto f = [&](double q2) {
            const Triple p{c + q1, c + q2, c - q1 - q2};
            return t.f_sum(p) * std::exp(kI * (p[0] * x[0] + p[1] * x[1] + p[2] * x[2]));
        };
        double err = 0.0;
        const Complex v = gauss_kronrod<double, 15>::integrate(f, -half, half, opts.max_depth,
                                                               opts.relative_tolerance, &err);
        worst_error = std::max(worst_error, err / std::max(std::abs(v), 1e-300));
        return v;
    };
    double err = 0.0;
    const Complex v = gauss_kronrod<double, 15>::integrate(inner, -half, half, opts.max_depth,
                                                           opts.relative_tolerance, &err);
    const double rel = err / std::max(std::abs(v), 1e-300);
    if (!(rel <= 100.0 * opts.relative_tolerance) || !std::isfinite(std::abs(v))) {
        std::ostringstream diag;
        diag << "window=" << half << " rel_error=" << rel << " inner_rel_error=" << worst_error
             << " max_depth=" << opts.max_depth;
        throw ToleranceError("connected three-photon quadrature did not converge", diag.str());
    }
    return v;
}

// The truncated integral converges as 1/window at coincident coordinates;
// one Richardson step over (W, 2W) removes that term.
Complex quadrature_fourier(const ThreePhotonConnectedT& t, const Triple& x, const QuadratureOptions& opts) {
    const double half = opts.window * t.params().gamma_t();
    const Complex narrow = windowed_integral(t, x, half, opts);
    const Complex wide = windowed_integral(t, x, 2.0 * half, opts);
    return 2.0 * wide - narrow;
}

}  // namespace

ThreePhotonConnectedT::ThreePhotonConnectedT(const TWGParams& params, const Triple& k)
    : params_(params), k_(k) {
    const double g = params.gamma_t();
    prefactor_ = kI * (g * g * g / (3.0 * 4.0 * kPi * kPi));
}

Complex ThreePhotonConnectedT::f_sum_raw(const ComplexTriple& p) const {
    const Complex a = params_.alpha();
    return 2.0 * factorized_sum(k_, p, a) + factorized_sum(p, k_, a);
}

Complex ThreePhotonConnectedT::f_sum(const Triple& p) const {
    double gap = std::numeric_limits<double>::infinity();
    for (double ki : k_)
        for (double pj : p) gap = std::min(gap, std::abs(pj - ki));
    const double g = params_.gamma_t();
    if (gap >= kCoincidenceGap * g) return f_sum_raw({p[0], p[1], p[2]});

    const double r = kCircleRadius * g;
    Complex acc{};
    for (int m = 0; m < kCirclePoints; ++m) {
        const double theta = 2.0 * kPi * (m + 0.5) / kCirclePoints;
        const Complex z = r * std::exp(kI * theta);
        acc += f_sum_raw({p[0] + z * kCircleDirection[0], p[1] + z * kCircleDirection[1],
                          p[2] + z * kCircleDirection[2]});
    }
    return acc / static_cast<double>(kCirclePoints);
}

Complex ThreePhotonConnectedT::operator()(const Triple& p) const {
    require_shell(k_, p);
    return prefactor_ * f_sum(p);
}

Complex three_photon_connected_t(const TWGParams& p, const Triple& k, const Triple& pout) {
    return ThreePhotonConnectedT(p, k)(pout);
}

ScatteringAmplitudeSet three_photon_s(const TWGParams& p, const Triple& k) {
    const double e = k[0] + k[1] + k[2];
    ScatteringAmplitudeSet set(3, e);
    const Complex t0 = transmission_t(p, k[0]), t1 = transmission_t(p, k[1]), t2 = transmission_t(p, k[2]);
    const std::array<Complex, 3> ts{t0, t1, t2};
    for (const auto& s : kPerms)
        set.add_disconnected({{0, k[s[0]]}, {1, k[s[1]]}, {2, k[s[2]]}}, t0 * t1 * t2);
    for (std::size_t i = 0; i < 3; ++i) {
        const double ka = k[(i + 1) % 3], kb = k[(i + 2) % 3];
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t ja = (j + 1) % 3, jb = (j + 2) % 3;
            set.add_connected({{j, k[i]}}, ts[i], [p, ka, kb, ja, jb](std::span<const double> q) {
                return two_photon_t(p, ka, kb, q[ja], q[jb]);
            });
        }
    }
    ThreePhotonConnectedT conn(p, k);
    set.add_connected({}, 1.0, [conn](std::span<const double> q) { return conn({q[0], q[1], q[2]}); });
    return set;
}

double three_photon_fluorescence(const TWGParams& p, const Triple& k, const Triple& pout) {
    return std::norm(three_photon_connected_t(p, k, pout));
}

double FluorescenceSlice::max() const {
    return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

double FluorescenceSlice::mean() const {
    if (values.empty()) return 0.0;
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

FluorescenceSlice three_photon_fluorescence_slice(const TWGParams& p, const Triple& k, double lo,
                                                  double hi, std::size_t points) {
    if (points < 2) throw ContractViolation("fluorescence slice needs at least two points per axis");
    FluorescenceSlice s;
    s.p1.resize(points);
    for (std::size_t i = 0; i < points; ++i)
        s.p1[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    s.p2 = s.p1;
    const ThreePhotonConnectedT t(p, k);
    const double e = t.total_energy();
    s.values = parallel_map<double>(points * points, [&](std::size_t idx) {
        const double a = s.p1[idx / points], b = s.p2[idx % points];
        return std::norm(t({a, b, e - a - b}));
    });
    return s;
}

Complex three_photon_connected_fourier(const TWGParams& p, const Triple& k, const Triple& x,
                                       ConnectedMethod method, const QuadratureOptions& opts) {
    const ThreePhotonConnectedT t(p, k);
    if (method == ConnectedMethod::Residue) return t.prefactor() * residue_fourier(k, x, p.alpha());
    return t.prefactor() * quadrature_fourier(t, x, opts);
}

ThreePhotonAmplitude three_photon_out_wavefunction(const TWGParams& p, const Triple& k, const Triple& x,
                                                   ConnectedMethod method) {
    const std::array<Complex, 3> ts{transmission_t(p, k[0]), transmission_t(p, k[1]), transmission_t(p, k[2])};

    Complex plane{};
    for (const auto& s : kPerms)
        plane += std::exp(kI * (k[s[0]] * x[0] + k[s[1]] * x[1] + k[s[2]] * x[2]));
    const Complex a = ts[0] * ts[1] * ts[2] * plane;

    Complex b{};
    for (int i = 0; i < 3; ++i) {
        const double ka = k[(i + 1) % 3], kb = k[(i + 2) % 3];
        for (int j = 0; j < 3; ++j) {
            const double xa = x[(j + 1) % 3], xb = x[(j + 2) % 3];
            b += ts[i] * std::exp(kI * (k[i] * x[j])) * connected_pair_kernel(p, ka, kb, xa, xb);
        }
    }

    const Complex c = three_photon_connected_fourier(p, k, x, method);
    const double norm = 1.0 / (6.0 * std::pow(2.0 * kPi, 1.5));
    return {norm * a, norm * b, norm * c};
}

}  // namespace photon_scatter::twg
