#include "photon_scatter/amplitude_set.hpp"

#include <cmath>
#include <numeric>

namespace photon_scatter {

void ScatteringAmplitudeSet::add_disconnected(std::vector<DeltaPin> pins, Complex weight) {
    if (pins.size() != photons_)
        throw ContractViolation("disconnected term must pin every outgoing leg");
    disconnected_.push_back({std::move(pins), weight});
}

void ScatteringAmplitudeSet::add_connected(std::vector<DeltaPin> pins, Complex weight,
                                           ShellDensity density) {
    if (pins.size() + 2 > photons_)
        throw ContractViolation("connected term needs at least two free legs");
    connected_.push_back({std::move(pins), weight, std::move(density)});
}

bool ScatteringAmplitudeSet::on_shell(std::span<const double> p, double tol) const {
    if (p.size() != photons_) return false;
    const double sum = std::accumulate(p.begin(), p.end(), 0.0);
    return std::abs(sum - total_energy_) <= tol * std::max(1.0, std::abs(total_energy_));
}

Complex ScatteringAmplitudeSet::connected_density(std::span<const double> p) const {
    if (!on_shell(p)) throw ContractViolation("outgoing momenta are off the energy shell");
    Complex acc{};
    for (const auto& term : connected_) {
        if (term.pins.empty()) acc += term.weight * term.density(p);
    }
    return acc;
}

Complex ScatteringAmplitudeSet::disconnected_weight_at(std::span<const double> p, double tol) const {
    if (p.size() != photons_) throw ContractViolation("momentum vector has wrong length");
    Complex acc{};
    for (const auto& term : disconnected_) {
        bool match = true;
        for (const auto& pin : term.pins) {
            if (std::abs(p[pin.leg] - pin.momentum) > tol) {
                match = false;
                break;
            }
        }
        if (match) acc += term.weight;
    }
    return acc;
}

}  // namespace photon_scatter
