#pragma once

#include <array>

#include "photon_scatter/amplitude_set.hpp"
#include "photon_scatter/types.hpp"

/// Two-channel H-type waveguide, e-photons only (o-photons pass freely).
/// Amplitudes and pair wavefunctions require v1 = v2 = 1.
namespace photon_scatter::hwg {

struct ChannelAmplitudes {
    Complex t11;
    Complex t21;
    Complex t22;
};

ChannelAmplitudes channel_amplitudes(const HWGParams& p, double k);

/// Coefficient of δ(k1 + k2 − p1 − p2) for incoming channels (i1, i2) and
/// outgoing channels (j1, j2):
/// i V̄_{i1}V̄_{i2}V̄_{j1}V̄_{j2}(k1 + k2 − 2α_H)/(π(p2 − α_H)(k1 − α_H)(p1 − α_H)(k2 − α_H)).
Complex two_photon_t_h(const HWGParams& p, const std::array<Channel, 4>& channels, double k1, double k2,
                       double p1, double p2);

/// Outgoing channel pairs for the incident state a†_{k1,(1)} a†_{k2,(2)}|0⟩.
struct HTwoPhotonS {
    ScatteringAmplitudeSet s11;
    ScatteringAmplitudeSet s12;  // leg 0 in waveguide 1, leg 1 in waveguide 2
    ScatteringAmplitudeSet s22;
};

HTwoPhotonS two_photon_s_h(const HWGParams& p, double k1, double k2);

enum class Pair { P11, P12, P22 };

/// g_ij(x) at fixed (E, Δ_k); center-of-mass phase e^{iE x_c} excluded.
class PairWavefunctions {
public:
    PairWavefunctions(const HWGParams& params, double k1, double k2);

    Complex g11(double x) const;
    Complex g12(double x) const;
    Complex g22(double x) const;
    Complex operator()(Pair pair, double x) const;

    /// Bound (exponential) term of each g_ij, including 1/2π.
    Complex bound_term(Pair pair, double x) const;

    double total_energy() const noexcept { return k1_ + k2_; }
    double relative_momentum() const noexcept { return (k1_ - k2_) / 2.0; }

private:
    HWGParams params_;
    double k1_;
    double k2_;
    ChannelAmplitudes a1_;
    ChannelAmplitudes a2_;
    Complex beta_;
    Complex denom_;
};

PairWavefunctions pair_wavefunctions(const HWGParams& p, double k1, double k2);

/// |g_ij(x)|².
double second_order_correlation(const HWGParams& p, Pair pair, double k1, double k2, double x);

}  // namespace photon_scatter::hwg
