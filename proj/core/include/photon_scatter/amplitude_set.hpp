#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "photon_scatter/types.hpp"

namespace photon_scatter {

/// Constraint p_{leg} = momentum on one outgoing leg (a Dirac delta that is
/// never sampled on a grid).
struct DeltaPin {
    std::size_t leg;
    double momentum;
};

/// Smooth function of the full outgoing momentum vector. Only meaningful on
/// the energy shell of the set it belongs to.
using ShellDensity = std::function<Complex(std::span<const double>)>;

/// Fully delta-supported contribution: every outgoing leg is pinned.
struct DisconnectedTerm {
    std::vector<DeltaPin> pins;
    Complex weight;
};

/// Contribution carrying exactly one total-energy delta over the legs that
/// are not pinned. `pins` is empty for the fully connected part; the mixed
/// three-photon tier pins one leg and multiplies `weight` by the density of
/// the remaining pair.
struct ConnectedTerm {
    std::vector<DeltaPin> pins;
    Complex weight;
    ShellDensity density;
};

/// Structured S-matrix value for a fixed incoming state.
class ScatteringAmplitudeSet {
public:
    ScatteringAmplitudeSet(std::size_t photons, double total_energy)
        : photons_(photons), total_energy_(total_energy) {}

    std::size_t photons() const noexcept { return photons_; }
    double total_energy() const noexcept { return total_energy_; }

    const std::vector<DisconnectedTerm>& disconnected() const noexcept { return disconnected_; }
    const std::vector<ConnectedTerm>& connected() const noexcept { return connected_; }

    void add_disconnected(std::vector<DeltaPin> pins, Complex weight);
    void add_connected(std::vector<DeltaPin> pins, Complex weight, ShellDensity density);

    /// Sum of the fully connected terms at outgoing momenta `p`. Throws
    /// ContractViolation when `p` is off the energy shell.
    Complex connected_density(std::span<const double> p) const;

    /// Sum of the disconnected weights whose pins all match `p` within `tol`.
    Complex disconnected_weight_at(std::span<const double> p, double tol = 1e-12) const;

    bool on_shell(std::span<const double> p, double tol = 1e-9) const;

private:
    std::size_t photons_;
    double total_energy_;
    std::vector<DisconnectedTerm> disconnected_;
    std::vector<ConnectedTerm> connected_;
};

}  // namespace photon_scatter
