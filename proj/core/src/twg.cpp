#include "photon_scatter/twg.hpp"

#include <cmath>

namespace photon_scatter::twg {

namespace {

void require_shell(double k1, double k2, double p1, double p2) {
    const double e = k1 + k2;
    if (std::abs(e - p1 - p2) > 1e-9 * std::max(1.0, std::abs(e)))
        throw ContractViolation("two-photon T evaluated off the energy shell");
}

}  // namespace

Complex transmission_t(const TWGParams& p, double k) {
    const Complex a = p.alpha();
    return (k - std::conj(a)) / (k - a);
}

Complex two_photon_t_on_shell(const TWGParams& p, double k1, double k2, double p1) {
    const Complex a = p.alpha();
    const double g = p.gamma_t();
    const double p2 = k1 + k2 - p1;
    return kI * (g * g / kPi) * (k1 + k2 - 2.0 * a) / ((p2 - a) * (k1 - a) * (p1 - a) * (k2 - a));
}

Complex two_photon_t(const TWGParams& p, double k1, double k2, double p1, double p2) {
    require_shell(k1, k2, p1, p2);
    const Complex a = p.alpha();
    const double g = p.gamma_t();
    return kI * (g * g / kPi) * (k1 + k2 - 2.0 * a) / ((p2 - a) * (k1 - a) * (p1 - a) * (k2 - a));
}

ScatteringAmplitudeSet two_photon_s(const TWGParams& p, double k1, double k2) {
    const Complex tt = transmission_t(p, k1) * transmission_t(p, k2);
    ScatteringAmplitudeSet set(2, k1 + k2);
    set.add_disconnected({{0, k1}, {1, k2}}, tt);
    set.add_disconnected({{0, k2}, {1, k1}}, tt);
    set.add_connected({}, 1.0, [p, k1, k2](std::span<const double> q) {
        return two_photon_t(p, k1, k2, q[0], q[1]);
    });
    return set;
}

double two_photon_fluorescence(const TWGParams& p, double k1, double k2, double p1) {
    return std::norm(two_photon_t_on_shell(p, k1, k2, p1));
}

Complex connected_pair_kernel(const TWGParams& p, double k1, double k2, double x1, double x2) {
    const double e = k1 + k2;
    const double d = (k1 - k2) / 2.0;
    const Complex beta = e / 2.0 - p.alpha();
    const double g = p.gamma_t();
    const double xc = (x1 + x2) / 2.0;
    const double x = std::abs(x1 - x2);
    return std::exp(kI * (e * xc)) * (-8.0 * g * g * std::exp(kI * beta * x) / (4.0 * d * d - 4.0 * beta * beta));
}

TwoPhotonOutState::TwoPhotonOutState(const TWGParams& params, double k1, double k2)
    : params_(params), k1_(k1), k2_(k2) {
    tt_ = transmission_t(params, k1) * transmission_t(params, k2);
    delta_ = (k1 - k2) / 2.0;
    beta_ = (k1 + k2) / 2.0 - params.alpha();
    const double g = params.gamma_t();
    bound_coeff_ = -4.0 * g * g / (4.0 * delta_ * delta_ - 4.0 * beta_ * beta_);
}

Complex TwoPhotonOutState::bound_term(double x) const {
    return bound_coeff_ * std::exp(kI * beta_ * std::abs(x)) / (2.0 * kPi);
}

Complex TwoPhotonOutState::envelope(double x) const {
    return tt_ * std::cos(delta_ * x) / (2.0 * kPi) + bound_term(x);
}

Complex TwoPhotonOutState::operator()(double xc, double x) const {
    return std::exp(kI * ((k1_ + k2_) * xc)) * envelope(x);
}

Complex two_photon_out_wavefunction(const TWGParams& p, double k1, double k2, double xc, double x) {
    return TwoPhotonOutState(p, k1, k2)(xc, x);
}

}  // namespace photon_scatter::twg
