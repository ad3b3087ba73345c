#include <cmath>

#include "photon_scatter/hwg.hpp"
#include "photon_scatter/lattice.hpp"
#include "photon_scatter/twg.hpp"

namespace photon_scatter::lattice {

namespace {

// Continuum two-photon position state ⟨x1 x2|p1 p2⟩.
Complex pair_plane(double p1, double p2, double x1, double x2) {
    return (std::exp(kI * (p1 * x1 + p2 * x2)) + std::exp(kI * (p1 * x2 + p2 * x1))) / (4.0 * kPi);
}

void require_ring(long length, double cutoff) {
    if (length < 3) throw ContractViolation("ring length must be at least 3");
    if (!(cutoff > 0.0)) throw ContractViolation("momentum cutoff must be positive");
}

}  // namespace

Complex ring_two_photon_wavefunction(const TWGParams& p, long length, long n1, long n2, double x1, double x2,
                                     double cutoff) {
    require_ring(length, cutoff);
    const double dk = 2.0 * kPi / static_cast<double>(length);
    const double k1 = dk * n1, k2 = dk * n2;
    const long ne = n1 + n2;
    const double e = dk * ne;
    const Complex tt = twg::transmission_t(p, k1) * twg::transmission_t(p, k2);
    const Complex disconnected = 0.5 * tt * (pair_plane(k1, k2, x1, x2) + pair_plane(k2, k1, x1, x2));

    // p1 = dk m, p2 = dk (ne − m), |p1 − E/2| ≤ cutoff.
    const long m_lo = static_cast<long>(std::ceil((e / 2.0 - cutoff) / dk));
    const long m_hi = static_cast<long>(std::floor((e / 2.0 + cutoff) / dk));
    Complex sum{};
    for (long m = m_lo; m <= m_hi; ++m) {
        const double p1 = dk * m, p2 = dk * (ne - m);
        sum += twg::two_photon_t_on_shell(p, k1, k2, p1) * pair_plane(p1, p2, x1, x2);
    }
    return disconnected + 0.5 * dk * sum;
}

RingProbability ring_h_two_photon_probability(const HWGParams& p, long length, long n1, long n2, double cutoff) {
    require_ring(length, cutoff);
    if (n1 == n2) throw ContractViolation("ring unitarity sum needs distinct incoming momenta");
    const double dk = 2.0 * kPi / static_cast<double>(length);
    const double k1 = dk * n1, k2 = dk * n2;
    const long ne = n1 + n2;
    const double e = dk * ne;
    const auto a1 = hwg::channel_amplitudes(p, k1);
    const auto a2 = hwg::channel_amplitudes(p, k2);
    const double v1 = p.vbar1(), v2 = p.vbar2();
    const Complex a = p.alpha_h();
    const Complex base = kI * (k1 + k2 - 2.0 * a) / (kPi * (k1 - a) * (k2 - a));

    const Complex w11 = a1.t11 * a2.t21;
    const Complex w22 = a1.t21 * a2.t22;
    const Complex w12_direct = a1.t11 * a2.t22;
    const Complex w12_exchange = a1.t21 * a2.t21;

    const long m_lo = static_cast<long>(std::ceil((e / 2.0 - cutoff) / dk));
    const long m_hi = static_cast<long>(std::floor((e / 2.0 + cutoff) / dk));
    RingProbability r;
    for (long m = m_lo; m <= m_hi; ++m) {
        const double p1 = dk * m, p2 = dk * (ne - m);
        const Complex c = dk * base / ((p1 - a) * (p2 - a));
        Complex d11{}, d12{}, d22{};
        if (m == n1 || m == n2) {
            d11 = w11;
            d22 = w22;
        }
        if (m == n1) d12 = w12_direct;
        if (m == n2) d12 = w12_exchange;
        r.p11 += 0.5 * std::norm(d11 + v2 * v1 * v1 * v1 * c);
        r.p12 += std::norm(d12 + v1 * v1 * v2 * v2 * c);
        r.p22 += 0.5 * std::norm(d22 + v1 * v2 * v2 * v2 * c);
    }
    return r;
}

}  // namespace photon_scatter::lattice
