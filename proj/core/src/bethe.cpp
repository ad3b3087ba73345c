#include "photon_scatter/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace photon_scatter::bethe {

namespace {

void require_permutation(const Permutation& perm, std::size_t n) {
    if (perm.size() != n) throw ContractViolation("permutation has the wrong length");
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
            throw ContractViolation("not a permutation");
        seen[v] = true;
    }
}

}  // namespace

Complex single_phase(const TWGParams& p, double k) {
    const double d = k - p.omega_atom();
    const double h = p.gamma_t() / 2.0;
    return Complex(d, -h) / Complex(d, h);
}

Complex two_body_phase(double gamma, double ki, double kj) {
    const double d = ki - kj;
    return Complex(d, -gamma) / Complex(d, gamma);
}

Complex atom_amplitude(const TWGParams& p, double k) {
    return std::sqrt(p.gamma_t()) / Complex(k - p.omega_atom(), p.gamma_t() / 2.0);
}

Complex single_particle_wave(const TWGParams& p, double k, double x) {
    if (x == 0.0) throw DomainError("Bethe wavefunction is not defined at the scatterer (x = 0)");
    const Complex plane = std::exp(kI * (k * x));
    return x < 0.0 ? plane : plane * single_phase(p, k);
}

BetheState::BetheState(std::vector<double> momenta, double gamma) : momenta_(std::move(momenta)), gamma_(gamma) {
    if (momenta_.empty()) throw ContractViolation("Bethe state needs at least one momentum");
    if (!(gamma > 0.0)) throw ContractViolation("Bethe state needs gamma > 0");
}

Complex BetheState::amplitude(const Permutation& perm) const {
    require_permutation(perm, size());
    Complex a{1.0, 0.0};
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) a *= two_body_phase(gamma_, momenta_[perm[i]], momenta_[perm[j]]);
    return a;
}

Complex BetheState::amplitude_via_path(const std::vector<int>& swaps, Permutation* reached) const {
    Permutation perm(size());
    std::iota(perm.begin(), perm.end(), 0);
    Complex a{1.0, 0.0};
    for (int j : swaps) {
        if (j < 0 || static_cast<std::size_t>(j) + 1 >= size()) throw ContractViolation("swap position out of range");
        std::swap(perm[j], perm[j + 1]);
        a *= two_body_phase(gamma_, momenta_[perm[j]], momenta_[perm[j + 1]]);
    }
    if (reached) *reached = perm;
    return a;
}

Complex BetheState::eigenstate_value(const TWGParams& params, const std::vector<double>& x) const {
    if (x.size() != size()) throw ContractViolation("coordinate count does not match momenta");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0.0) throw DomainError("Bethe wavefunction is not defined at the scatterer (x = 0)");
        if (i > 0 && !(x[i] > x[i - 1])) throw ContractViolation("coordinates must be strictly increasing");
    }
    Complex total{};
    for (const auto& perm : all_permutations(size())) {
        Complex term = amplitude(perm);
        for (std::size_t i = 0; i < x.size(); ++i) term *= single_particle_wave(params, momenta_[perm[i]], x[i]);
        total += term;
    }
    return total;
}

Complex BetheState::plane_wave_sum(const std::vector<double>& x) const {
    if (x.size() != size()) throw ContractViolation("coordinate count does not match momenta");
    Complex total{};
    for (const auto& perm : all_permutations(size())) {
        double phase = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) phase += momenta_[perm[i]] * x[i];
        total += amplitude(perm) * std::exp(kI * phase);
    }
    return total;
}

std::vector<Permutation> all_permutations(std::size_t n) {
    Permutation perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace photon_scatter::bethe
