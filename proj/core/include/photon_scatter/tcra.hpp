#pragma once

#include "photon_scatter/amplitude_set.hpp"
#include "photon_scatter/types.hpp"

/// Single-photon scattering and bound states on the full cosine-band T-type
/// coupled-resonator array.
namespace photon_scatter::tcra {

/// r_k = −iΓ / (2J sin k (ε_k − Ω) + iΓ) for k in (0, π).
/// Throws DomainError when |sin k| < 1e-9 (band edge).
Complex reflection_amplitude(const TCRAParams& p, double k);

/// 1 + r_k.
Complex transmission_amplitude(const TCRAParams& p, double k);

/// Weight 1 + r_k on p = k and r_k on p = −k. No connected part.
ScatteringAmplitudeSet single_photon_s_matrix(const TCRAParams& p, double k);

struct SelfEnergy {
    double real_part;
    double imag_part;
    double dos;

    Complex value() const noexcept { return {real_part, imag_part}; }
};

/// Atom self-energy. Inside the band Re Σ is taken as 0 and Im Σ = Γρ/2 with
/// ρ(ω) = 2/√(4J² − (ω − ω₀)²); outside Σ = −Γ sign(ω − ω₀)/√((ω − ω₀)² − 4J²).
/// Throws DomainError at the band edges.
SelfEnergy self_energy(const TCRAParams& p, double omega);

enum class Branch { Lower, Upper };

struct BoundState {
    double energy;
    Branch branch;
    /// ln κ, κ = κ₊ for Lower and κ₋ for Upper.
    double decay_log;
    /// V / √((E_b − ω₀)² − 4J²).
    double amplitude;
    /// (−1)^|x| factor, present on the Upper branch.
    bool sign_alternating;

    double kappa() const;
};

struct BoundStatePair {
    BoundState lower;
    BoundState upper;
};

/// κ±(E) = −√(((E − ω₀)/2J)² − 1) ± (ω₀ − E)/(2J).
double kappa_plus(const TCRAParams& p, double energy);
double kappa_minus(const TCRAParams& p, double energy);

/// Left-hand side of the bound-state condition
/// E − Ω − Γ sign(E − ω₀)/√((E − ω₀)² − 4J²).
double bound_state_residual(const TCRAParams& p, double energy);

/// Both out-of-band roots of the bound-state condition. Requires Γ > 0.
BoundStatePair bound_state_energies(const TCRAParams& p);

/// ψ(x) on integer site x for a state returned by bound_state_energies(p).
double bound_state_wavefunction(const BoundState& b, const TCRAParams& p, long x);

}  // namespace photon_scatter::tcra
