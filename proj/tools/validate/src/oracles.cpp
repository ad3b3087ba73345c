#include "photon_scatter/validate/oracles.hpp"

#include <algorithm>

namespace photon_scatter::validate {

Complex literal_f_sum(Complex alpha, const std::array<double, 3>& k, const std::array<double, 3>& p) {
    std::array<int, 3> pp{0, 1, 2};
    Complex total{};
    do {
        const Complex w1 = k[pp[0]], w2 = k[pp[1]], w3 = k[pp[2]];
        std::array<int, 3> qq{0, 1, 2};
        do {
            const Complex v1 = p[qq[0]], v2 = p[qq[1]], v3 = p[qq[2]];
            total += 1.0 / ((v1 - w1) * (v3 - w3) * (w1 - alpha) * (v3 - alpha) * (w1 + w2 - v1 - alpha));
            total += 1.0 / ((v2 - w2) * (v3 - w3) * (v2 - alpha) * (w3 - alpha) * (v2 + v1 - w2 - alpha));
            total += 1.0 / ((v2 - w2) * (v1 - w1) * (v1 - alpha) * (w2 - alpha) * (w2 + w3 - v2 - alpha));
        } while (std::next_permutation(qq.begin(), qq.end()));
    } while (std::next_permutation(pp.begin(), pp.end()));
    return total;
}

Complex literal_three_photon_t(const TWGParams& p, const std::array<double, 3>& k, const std::array<double, 3>& pout) {
    const double g = p.gamma_t();
    const double two_pi = 2.0 * kPi;
    return Complex(0.0, g * g * g / (3.0 * two_pi * two_pi)) * literal_f_sum(p.alpha(), k, pout);
}

Complex literal_two_photon_t(double omega, double gamma_t, double k1, double k2, double p1, double p2) {
    const Complex alpha(omega, -gamma_t / 2.0);
    const Complex num = Complex(0.0, gamma_t * gamma_t / kPi) * (k1 + k2 - 2.0 * alpha);
    return num / (p2 - alpha) / (k1 - alpha) / (p1 - alpha) / (k2 - alpha);
}

double fit_slope(const double* x, const double* y, std::size_t n) {
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

}  // namespace photon_scatter::validate
