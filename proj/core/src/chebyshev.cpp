#include <cmath>
#include <limits>
#include <string>

#include "photon_scatter/lattice.hpp"

namespace photon_scatter::lattice {

std::pair<double, double> spectral_bounds(const Eigen::SparseMatrix<double>& h) {
    const long n = h.outerSize();
    std::vector<double> center(n, 0.0), radius(n, 0.0);
    for (long col = 0; col < n; ++col) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(h, col); it; ++it) {
            if (it.row() == it.col()) center[it.row()] += it.value();
            else radius[it.row()] += std::abs(it.value());
        }
    }
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (long i = 0; i < n; ++i) {
        lo = std::min(lo, center[i] - radius[i]);
        hi = std::max(hi, center[i] + radius[i]);
    }
    return {lo, hi};
}

Eigen::VectorXcd chebyshev_propagate(const Eigen::SparseMatrix<double>& h, const Eigen::VectorXcd& psi, double t,
                                     double lo, double hi, double tolerance) {
    if (!(hi > lo)) throw ContractViolation("spectral bounds must satisfy hi > lo");
    // Pad the interval so rounding in the bounds cannot push eigenvalues out.
    const double pad = 1e-6 * (hi - lo);
    lo -= pad;
    hi += pad;
    const double shift = 0.5 * (hi + lo);
    const double scale = 0.5 * (hi - lo);
    // Keep each step's Bessel argument moderate.
    const double max_arg = 40.0;
    const int steps = std::max(1, static_cast<int>(std::ceil(scale * std::abs(t) / max_arg)));
    const double dt = t / steps;
    const double arg = scale * std::abs(dt);
    const Complex minus_i = dt >= 0.0 ? -kI : kI;

    std::vector<double> bessel;
    for (int n = 0;; ++n) {
        const double jn = std::cyl_bessel_j(static_cast<double>(n), arg);
        bessel.push_back(jn);
        if (n > arg && std::abs(jn) < tolerance) break;
        if (n > 10000) {
            throw ToleranceError("Chebyshev series did not converge", "arg=" + std::to_string(arg));
        }
    }

    auto apply = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
        return (h * v - shift * v) / scale;
    };

    Eigen::VectorXcd cur = psi;
    const Complex phase = std::exp(minus_i * (shift * std::abs(dt)));
    for (int s = 0; s < steps; ++s) {
        Eigen::VectorXcd t0 = cur;
        Eigen::VectorXcd t1 = apply(cur);
        Eigen::VectorXcd acc = bessel[0] * t0 + 2.0 * minus_i * bessel[1] * t1;
        Complex ipow = minus_i;
        for (std::size_t n = 2; n < bessel.size(); ++n) {
            Eigen::VectorXcd t2 = 2.0 * apply(t1) - t0;
            ipow *= minus_i;
            acc += 2.0 * ipow * bessel[n] * t2;
            t0.swap(t1);
            t1.swap(t2);
        }
        cur = phase * acc;
    }
    return cur;
}

}  // namespace photon_scatter::lattice
