#pragma once

#include <array>

#include "photon_scatter/types.hpp"

/// Independent re-evaluations of printed formulas, written without sharing
/// code with the optimized evaluators in the core library.
namespace photon_scatter::validate {

/// Σ_a F^(a)(k, p): the 36 (P, Q) relabelings of each of the three printed
/// F-functions summed term by term (108 rational terms).
Complex literal_f_sum(Complex alpha, const std::array<double, 3>& k, const std::array<double, 3>& p);

/// iΓ_T³/(3(2π)²) times literal_f_sum.
Complex literal_three_photon_t(const TWGParams& p, const std::array<double, 3>& k, const std::array<double, 3>& pout);

/// Direct substitution into the two-photon T density.
Complex literal_two_photon_t(double omega, double gamma_t, double k1, double k2, double p1, double p2);

/// Slope of a least-squares line through (x_i, y_i).
double fit_slope(const double* x, const double* y, std::size_t n);

}  // namespace photon_scatter::validate
