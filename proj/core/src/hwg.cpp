#include "photon_scatter/hwg.hpp"

#include <cmath>

namespace photon_scatter::hwg {

namespace {

void require_unit_velocities(const HWGParams& p) {
    if (!p.unit_velocities())
        throw ContractViolation("H-type amplitudes are defined for v1 = v2 = 1 only");
}

Complex connected_density(const HWGParams& p, double coupling, double k1, double k2, double p1, double p2) {
    const Complex a = p.alpha_h();
    return kI * coupling * (k1 + k2 - 2.0 * a) / (kPi * (p2 - a) * (k1 - a) * (p1 - a) * (k2 - a));
}

}  // namespace

ChannelAmplitudes channel_amplitudes(const HWGParams& p, double k) {
    require_unit_velocities(p);
    const double v1 = p.vbar1() * p.vbar1();
    const double v2 = p.vbar2() * p.vbar2();
    const Complex den = k - p.omega_atom() + kI * (p.gamma_e() / 2.0);
    return {(k - p.omega_atom() + kI * ((v2 - v1) / 2.0)) / den,
            -kI * p.vbar1() * p.vbar2() / den,
            (k - p.omega_atom() + kI * ((v1 - v2) / 2.0)) / den};
}

Complex two_photon_t_h(const HWGParams& p, const std::array<Channel, 4>& channels, double k1, double k2,
                       double p1, double p2) {
    require_unit_velocities(p);
    const double e = k1 + k2;
    if (std::abs(e - p1 - p2) > 1e-9 * std::max(1.0, std::abs(e)))
        throw ContractViolation("H-type T evaluated off the energy shell");
    double coupling = 1.0;
    for (Channel c : channels) coupling *= p.vbar(c);
    return connected_density(p, coupling, k1, k2, p1, p2);
}

HTwoPhotonS two_photon_s_h(const HWGParams& p, double k1, double k2) {
    require_unit_velocities(p);
    const ChannelAmplitudes a1 = channel_amplitudes(p, k1);
    const ChannelAmplitudes a2 = channel_amplitudes(p, k2);
    const double e = k1 + k2;
    const double v1 = p.vbar1(), v2 = p.vbar2();

    auto conn = [p, k1, k2](double coupling) {
        return [p, k1, k2, coupling](std::span<const double> q) {
            return connected_density(p, coupling, k1, k2, q[0], q[1]);
        };
    };

    HTwoPhotonS s{ScatteringAmplitudeSet(2, e), ScatteringAmplitudeSet(2, e), ScatteringAmplitudeSet(2, e)};
    s.s11.add_disconnected({{0, k1}, {1, k2}}, a1.t11 * a2.t21);
    s.s11.add_disconnected({{0, k2}, {1, k1}}, a1.t11 * a2.t21);
    s.s11.add_connected({}, 1.0, conn(v2 * v1 * v1 * v1));

    s.s12.add_disconnected({{0, k1}, {1, k2}}, a1.t11 * a2.t22);
    s.s12.add_disconnected({{0, k2}, {1, k1}}, a1.t21 * a2.t21);
    s.s12.add_connected({}, 1.0, conn(v1 * v1 * v2 * v2));

    s.s22.add_disconnected({{0, k1}, {1, k2}}, a1.t21 * a2.t22);
    s.s22.add_disconnected({{0, k2}, {1, k1}}, a1.t21 * a2.t22);
    s.s22.add_connected({}, 1.0, conn(v1 * v2 * v2 * v2));
    return s;
}

PairWavefunctions::PairWavefunctions(const HWGParams& params, double k1, double k2)
    : params_(params), k1_(k1), k2_(k2) {
    require_unit_velocities(params);
    a1_ = channel_amplitudes(params, k1);
    a2_ = channel_amplitudes(params, k2);
    const double e = k1 + k2;
    const double d = (k1 - k2) / 2.0;
    beta_ = e / 2.0 - params.alpha_h();
    const Complex w = e - 2.0 * params.alpha_h();
    denom_ = 4.0 * d * d - w * w;
}

Complex PairWavefunctions::bound_term(Pair pair, double x) const {
    const double v1 = params_.vbar1(), v2 = params_.vbar2();
    double c = 0.0;
    switch (pair) {
        case Pair::P11: c = 4.0 * v2 * v1 * v1 * v1; break;
        case Pair::P12: c = 8.0 * v1 * v1 * v2 * v2; break;
        case Pair::P22: c = 4.0 * v1 * v2 * v2 * v2; break;
    }
    return -c * std::exp(kI * beta_ * std::abs(x)) / denom_ / (2.0 * kPi);
}

Complex PairWavefunctions::g11(double x) const {
    const double d = relative_momentum();
    return a1_.t11 * a2_.t21 * std::cos(d * x) / (2.0 * kPi) + bound_term(Pair::P11, x);
}

Complex PairWavefunctions::g12(double x) const {
    const double d = relative_momentum();
    const Complex direct = a1_.t11 * a2_.t22;
    const Complex exchange = a1_.t21 * a2_.t21;
    return ((direct + exchange) * std::cos(d * x) + kI * (direct - exchange) * std::sin(d * x)) / (2.0 * kPi) +
           bound_term(Pair::P12, x);
}

Complex PairWavefunctions::g22(double x) const {
    const double d = relative_momentum();
    return a1_.t21 * a2_.t22 * std::cos(d * x) / (2.0 * kPi) + bound_term(Pair::P22, x);
}

Complex PairWavefunctions::operator()(Pair pair, double x) const {
    switch (pair) {
        case Pair::P11: return g11(x);
        case Pair::P12: return g12(x);
        case Pair::P22: return g22(x);
    }
    return {};
}

PairWavefunctions pair_wavefunctions(const HWGParams& p, double k1, double k2) {
    return PairWavefunctions(p, k1, k2);
}

double second_order_correlation(const HWGParams& p, Pair pair, double k1, double k2, double x) {
    return std::norm(PairWavefunctions(p, k1, k2)(pair, x));
}

}  // namespace photon_scatter::hwg
