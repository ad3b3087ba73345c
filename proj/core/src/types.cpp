#include "photon_scatter/types.hpp"

#include <cmath>
#include <sstream>

namespace photon_scatter {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << name << " must be finite";
        throw ContractViolation(os.str());
    }
}

}  // namespace

TCRAParams::TCRAParams(double omega_atom, double omega_cavity, double hopping, double coupling)
    : omega_atom_(omega_atom),
      omega_cavity_(omega_cavity),
      hopping_(hopping),
      coupling_(coupling),
      gamma_(coupling * coupling) {
    require_finite(omega_atom, "omega_atom");
    require_finite(omega_cavity, "omega_cavity");
    require_finite(hopping, "hopping");
    require_finite(coupling, "coupling");
    if (!(hopping > 0.0)) throw ContractViolation("hopping J must be positive");
}

TWGParams::TWGParams(double omega_atom, double gamma_t)
    : omega_atom_(omega_atom), gamma_t_(gamma_t), alpha_(omega_atom, -gamma_t / 2.0) {
    require_finite(omega_atom, "omega_atom");
    require_finite(gamma_t, "gamma_t");
    if (!(gamma_t > 0.0)) throw ContractViolation("gamma_t must be positive");
}

HWGParams::HWGParams(double omega_atom, double vbar1, double vbar2, double v1, double v2)
    : omega_atom_(omega_atom), vbar_{vbar1, vbar2}, velocity_{v1, v2} {
    require_finite(omega_atom, "omega_atom");
    require_finite(vbar1, "vbar1");
    require_finite(vbar2, "vbar2");
    require_finite(v1, "v1");
    require_finite(v2, "v2");
    if (!(v1 > 0.0) || !(v2 > 0.0)) throw ContractViolation("group velocities must be positive");
    gamma_e_ = vbar1 * vbar1 / v1 + vbar2 * vbar2 / v2;
    if (!(gamma_e_ > 0.0)) throw ContractViolation("at least one waveguide must couple to the atom");
    alpha_h_ = Complex(omega_atom, -gamma_e_ / 2.0);
}

HWGParams HWGParams::swapped() const {
    return HWGParams(omega_atom_, vbar_[1], vbar_[0], velocity_[1], velocity_[0]);
}

double dispersion_eval(const Dispersion& d, double k) {
    return std::visit(
        [k](const auto& band) -> double {
            using T = std::decay_t<decltype(band)>;
            if constexpr (std::is_same_v<T, CosineBand>) {
                return band.omega_cavity - 2.0 * band.hopping * std::cos(k);
            } else {
                return band.group_velocity * std::abs(k);
            }
        },
        d);
}

TwoPhotonKinematics TwoPhotonKinematics::from_lab(double k1, double k2, double x1, double x2) noexcept {
    return {k1 + k2, (k1 - k2) / 2.0, (x1 + x2) / 2.0, x1 - x2};
}

std::array<Complex, 2> EoMixing::apply(Complex plus_k, Complex minus_k) const noexcept {
    return {matrix[0][0] * plus_k + matrix[0][1] * minus_k,
            matrix[1][0] * plus_k + matrix[1][1] * minus_k};
}

EoMixing EoMixing::inverse() const noexcept {
    // Real orthogonal: inverse is the transpose.
    return {{{{matrix[0][0], matrix[1][0]}, {matrix[0][1], matrix[1][1]}}}};
}

EoMixing EoMixing::compose(const EoMixing& rhs) const noexcept {
    EoMixing out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.matrix[i][j] = matrix[i][0] * rhs.matrix[0][j] + matrix[i][1] * rhs.matrix[1][j];
    return out;
}

EoMixing eo_decompose(double k) {
    if (!(k > 0.0)) throw ContractViolation("eo_decompose requires k > 0");
    const double s = 1.0 / std::sqrt(2.0);
    return {{{{s, s}, {s, -s}}}};
}

}  // namespace photon_scatter
