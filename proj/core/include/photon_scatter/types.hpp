#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <variant>

namespace photon_scatter {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Input outside the mathematical domain of an operation (band edges, x = 0
/// in the Bethe construction, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Caller broke a documented precondition (off-shell momenta, mismatched
/// bound-state branch, unsupported group velocities).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed to reach its tolerance. `diagnostics()` holds
/// a short key=value description of what was attempted.
class ToleranceError : public std::runtime_error {
public:
    ToleranceError(const std::string& what, std::string diagnostics)
        : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}
    const std::string& diagnostics() const noexcept { return diagnostics_; }

private:
    std::string diagnostics_;
};

// ---------------------------------------------------------------------------
// Parameter records

/// Tight-binding T-type coupled-resonator array: a two-level atom (level
/// spacing `omega_atom`) side-coupled with strength `coupling` to site 0 of a
/// chain of cavities (frequency `omega_cavity`, hopping `hopping`). Lattice
/// spacing is 1.
class TCRAParams {
public:
    TCRAParams(double omega_atom, double omega_cavity, double hopping, double coupling);

    double omega_atom() const noexcept { return omega_atom_; }
    double omega_cavity() const noexcept { return omega_cavity_; }
    double hopping() const noexcept { return hopping_; }
    double coupling() const noexcept { return coupling_; }
    /// Γ = V².
    double gamma() const noexcept { return gamma_; }

    double band_bottom() const noexcept { return omega_cavity_ - 2.0 * hopping_; }
    double band_top() const noexcept { return omega_cavity_ + 2.0 * hopping_; }

private:
    double omega_atom_;
    double omega_cavity_;
    double hopping_;
    double coupling_;
    double gamma_;
};

/// Linearized T-type waveguide seen by the even-parity photon.
class TWGParams {
public:
    TWGParams(double omega_atom, double gamma_t);

    double omega_atom() const noexcept { return omega_atom_; }
    double gamma_t() const noexcept { return gamma_t_; }
    /// α = Ω − iΓ_T/2.
    Complex alpha() const noexcept { return alpha_; }

private:
    double omega_atom_;
    double gamma_t_;
    Complex alpha_;
};

enum class Channel { One = 1, Two = 2 };

/// Two-channel H-type waveguide. `vbar` are the even-channel couplings
/// V̄_s = √2 V_s and `group_velocity` the per-waveguide v_s.
class HWGParams {
public:
    HWGParams(double omega_atom, double vbar1, double vbar2, double v1 = 1.0, double v2 = 1.0);

    double omega_atom() const noexcept { return omega_atom_; }
    double vbar(Channel c) const noexcept { return c == Channel::One ? vbar_[0] : vbar_[1]; }
    double vbar1() const noexcept { return vbar_[0]; }
    double vbar2() const noexcept { return vbar_[1]; }
    double group_velocity(Channel c) const noexcept { return c == Channel::One ? velocity_[0] : velocity_[1]; }
    /// Γ_e = Σ_s V̄_s² / v_s.
    double gamma_e() const noexcept { return gamma_e_; }
    /// α_H = Ω − iΓ_e/2.
    Complex alpha_h() const noexcept { return alpha_h_; }

    bool unit_velocities() const noexcept { return velocity_[0] == 1.0 && velocity_[1] == 1.0; }
    /// Same atom with the two waveguides relabeled.
    HWGParams swapped() const;

private:
    double omega_atom_;
    std::array<double, 2> vbar_;
    std::array<double, 2> velocity_;
    double gamma_e_;
    Complex alpha_h_;
};

// ---------------------------------------------------------------------------
// Dispersion

struct CosineBand {
    double omega_cavity;
    double hopping;
};

struct LinearBand {
    double group_velocity = 1.0;
};

using Dispersion = std::variant<CosineBand, LinearBand>;

/// ε_k. CosineBand expects k in (−π, π].
double dispersion_eval(const Dispersion& d, double k);

// ---------------------------------------------------------------------------
// Kinematics

/// Center-of-mass / relative variables of a photon pair.
struct TwoPhotonKinematics {
    double total_energy;       // E = k1 + k2
    double relative_momentum;  // Δ_k = (k1 − k2)/2
    double center;             // x_c = (x1 + x2)/2
    double relative;           // x = x1 − x2

    static TwoPhotonKinematics from_lab(double k1, double k2, double x1, double x2) noexcept;

    std::array<double, 2> momenta() const noexcept {
        return {total_energy / 2.0 + relative_momentum, total_energy / 2.0 - relative_momentum};
    }
    std::array<double, 2> positions() const noexcept {
        return {center + relative / 2.0, center - relative / 2.0};
    }
};

// ---------------------------------------------------------------------------
// Even/odd channel mixing

/// (a_{k,e}, a_{k,o}) = M (a_k, a_{−k}) with M = (1/√2)[[1, 1], [1, −1]].
struct EoMixing {
    std::array<std::array<double, 2>, 2> matrix;

    /// Maps amplitudes on (k, −k) to amplitudes on (e, o).
    std::array<Complex, 2> apply(Complex plus_k, Complex minus_k) const noexcept;
    EoMixing inverse() const noexcept;
    EoMixing compose(const EoMixing& rhs) const noexcept;
};

/// Mixing coefficients for k > 0.
EoMixing eo_decompose(double k);

}  // namespace photon_scatter
