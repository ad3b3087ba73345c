#pragma once

#include <vector>

#include "photon_scatter/types.hpp"

/// Scattering Bethe-ansatz eigenstates of the linearized T-type waveguide.
namespace photon_scatter::bethe {

/// e^{iδ_p} = (p − Ω − iΓ/2)/(p − Ω + iΓ/2).
Complex single_phase(const TWGParams& p, double k);

/// e^{iΦ} = (k_i − k_j − iΓ)/(k_i − k_j + iΓ).
Complex two_body_phase(double gamma, double ki, double kj);

/// Atom amplitude e_p = V/(p − Ω + iΓ/2), V = √Γ.
Complex atom_amplitude(const TWGParams& p, double k);

/// f_p(x) = e^{ipx}[θ(−x) + e^{iδ_p}θ(x)]. Throws DomainError at x = 0.
Complex single_particle_wave(const TWGParams& p, double k, double x);

/// Permutations are 0-based: perm[j] is the momentum index at position j.
using Permutation = std::vector<int>;

class BetheState {
public:
    BetheState(std::vector<double> momenta, double gamma);

    const std::vector<double>& momenta() const noexcept { return momenta_; }
    double gamma() const noexcept { return gamma_; }
    std::size_t size() const noexcept { return momenta_.size(); }

    /// A_P with A_identity = 1: product of e^{iΦ(k_{P_i}, k_{P_j})} over the
    /// inverted position pairs i < j, P_i > P_j.
    Complex amplitude(const Permutation& perm) const;

    /// A_P accumulated along a path of adjacent transpositions applied to the
    /// identity; step j swaps positions j and j + 1 and multiplies by
    /// e^{iΦ(k_{P_j}, k_{P_{j+1}})} of the permutation after the swap.
    /// Returns the permutation reached in `reached`.
    Complex amplitude_via_path(const std::vector<int>& swaps, Permutation* reached = nullptr) const;

    /// Σ_P A_P Π_i f_{k_{P_i}}(x_i) for strictly increasing x, none at 0.
    Complex eigenstate_value(const TWGParams& params, const std::vector<double>& x) const;

    /// Σ_P A_P e^{iΣ_j k_{P_j} x_j}, the incoming (all x < 0) form.
    Complex plane_wave_sum(const std::vector<double>& x) const;

private:
    std::vector<double> momenta_;
    double gamma_;
};

/// All permutations of 0..n−1 in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace photon_scatter::bethe
