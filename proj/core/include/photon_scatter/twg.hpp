#pragma once

#include "photon_scatter/amplitude_set.hpp"
#include "photon_scatter/types.hpp"

/// One- and two-photon scattering of e-photons in the linearized T-type
/// waveguide (v_g = 1). Continuum normalization throughout.
namespace photon_scatter::twg {

/// t_k = (k − α*)/(k − α).
Complex transmission_t(const TWGParams& p, double k);

/// Coefficient of δ(k1 + k2 − p1 − p2) in iT:
/// i(Γ_T²/π)(k1 + k2 − 2α) / ((p2 − α)(k1 − α)(p1 − α)(k2 − α)).
/// Throws ContractViolation off the energy shell.
Complex two_photon_t(const TWGParams& p, double k1, double k2, double p1, double p2);

/// Same density with the shell constraint already applied (p2 = k1 + k2 − p1).
Complex two_photon_t_on_shell(const TWGParams& p, double k1, double k2, double p1);

/// t_{k1}t_{k2}(δδ + δδ) plus the connected density.
ScatteringAmplitudeSet two_photon_s(const TWGParams& p, double k1, double k2);

/// |two_photon_t|² with p2 = k1 + k2 − p1.
double two_photon_fluorescence(const TWGParams& p, double k1, double k2, double p1);

/// Position-space image of the connected two-photon density,
/// ∫dq C(E/2 + q, E/2 − q) e^{iq x} = −8Γ_T² e^{iβ|x|}/(4Δ_k² − (2β)²), β = E/2 − α,
/// times e^{iE x_c}. Shared by the two- and three-photon out-states.
Complex connected_pair_kernel(const TWGParams& p, double k1, double k2, double x1, double x2);

/// ⟨x_c, x|out⟩ for the incident pair (k1, k2).
class TwoPhotonOutState {
public:
    TwoPhotonOutState(const TWGParams& params, double k1, double k2);

    const TWGParams& params() const noexcept { return params_; }
    double k1() const noexcept { return k1_; }
    double k2() const noexcept { return k2_; }

    /// e^{iE x_c}(1/2π)[t1 t2 cos(Δ_k x) − 4Γ_T² e^{i(E − 2Ω + iΓ_T)|x|/2}/(4Δ_k² − (E − 2Ω + iΓ_T)²)].
    Complex operator()(double xc, double x) const;
    /// The bracket alone (x_c = 0).
    Complex envelope(double x) const;
    /// Only the bound (second) term of the bracket, including 1/2π.
    Complex bound_term(double x) const;

private:
    TWGParams params_;
    double k1_;
    double k2_;
    Complex tt_;
    Complex bound_coeff_;
    Complex beta_;
    double delta_;
};

Complex two_photon_out_wavefunction(const TWGParams& p, double k1, double k2, double xc, double x);

}  // namespace photon_scatter::twg
