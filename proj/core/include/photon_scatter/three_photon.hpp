#pragma once

#include <array>
#include <vector>

#include "photon_scatter/amplitude_set.hpp"
#include "photon_scatter/types.hpp"

namespace photon_scatter::twg {

using Triple = std::array<double, 3>;
using ComplexTriple = std::array<Complex, 3>;

/// Connected three-photon T density for a fixed incoming triple.
///
/// Evaluated through the factorized form of the F-sums:
///   Σ_a F^(a)(k, p) = 2 S(k, p) + S(p, k),
///   S(w, w') = Σ_{a≠c} 1/(w_a − α) [ (Σ_j B_j)(Σ_l C_l) − Σ_j B_j C_j ],
///   B_j = 1/((w'_j − w_a)(w_a + w_b − w'_j − α)),  C_l = 1/((w'_l − w_c)(w'_l − α)),
/// b the remaining index. Individual terms are singular at p_j = k_i but the
/// sum is not; such points are evaluated as the mean over a small complex
/// circle on the energy shell.
class ThreePhotonConnectedT {
public:
    ThreePhotonConnectedT(const TWGParams& params, const Triple& k);

    const TWGParams& params() const noexcept { return params_; }
    const Triple& incoming() const noexcept { return k_; }
    double total_energy() const noexcept { return k_[0] + k_[1] + k_[2]; }

    /// iΓ_T³/(3(2π)²) Σ_a F^(a). Throws ContractViolation off shell.
    Complex operator()(const Triple& p) const;

    /// Σ_a F^(a) at real shell momenta, coincidences handled.
    Complex f_sum(const Triple& p) const;

    /// Σ_a F^(a) at an arbitrary complex point; no coincidence handling.
    Complex f_sum_raw(const ComplexTriple& p) const;

    Complex prefactor() const noexcept { return prefactor_; }

    /// min_{i,j} |p_j − k_i| below which the circle mean is used, in units of Γ_T.
    static constexpr double kCoincidenceGap = 1e-4;
    static constexpr double kCircleRadius = 1e-2;
    static constexpr int kCirclePoints = 16;

private:
    TWGParams params_;
    Triple k_;
    Complex prefactor_;
};

Complex three_photon_connected_t(const TWGParams& p, const Triple& k, const Triple& pout);

/// Tier (a): 6 fully pinned products t1 t2 t3.
/// Tier (b): 9 terms, one transmitted leg k_i pinned on outgoing leg j with
///           weight t_{k_i}, times the two-photon connected density of the rest.
/// Tier (c): the connected three-photon density.
ScatteringAmplitudeSet three_photon_s(const TWGParams& p, const Triple& k);

double three_photon_fluorescence(const TWGParams& p, const Triple& k, const Triple& pout);

/// |T₃|² on the square p1, p2 ∈ [lo, hi] with p3 = E − p1 − p2.
struct FluorescenceSlice {
    std::vector<double> p1;
    std::vector<double> p2;
    std::vector<double> values;  // row-major, p1 outer

    double max() const;
    double mean() const;
};

FluorescenceSlice three_photon_fluorescence_slice(const TWGParams& p, const Triple& k, double lo,
                                                  double hi, std::size_t points);

enum class ConnectedMethod {
    Residue,     // exact contour-integral closed form
    Quadrature,  // adaptive Gauss–Kronrod over |q| ≤ W and ≤ 2W, W = 40Γ_T, Richardson-combined
};

/// ⟨x1 x2 x3|out⟩ split by tier, each already multiplied by 1/(6(2π)^{3/2}).
struct ThreePhotonAmplitude {
    Complex disconnected;
    Complex mixed;
    Complex connected;

    Complex total() const noexcept { return disconnected + mixed + connected; }
};

ThreePhotonAmplitude three_photon_out_wavefunction(const TWGParams& p, const Triple& k, const Triple& x,
                                                   ConnectedMethod method = ConnectedMethod::Residue);

/// Options of the quadrature route.
struct QuadratureOptions {
    double window = 40.0;  // half-width in units of Γ_T
    double relative_tolerance = 1e-8;
    unsigned max_depth = 12;
};

Complex three_photon_connected_fourier(const TWGParams& p, const Triple& k, const Triple& x,
                                       ConnectedMethod method, const QuadratureOptions& opts = {});

}  // namespace photon_scatter::twg
