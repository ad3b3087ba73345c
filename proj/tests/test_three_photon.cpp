#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "photon_scatter/three_photon.hpp"
#include "photon_scatter/twg.hpp"
#include "photon_scatter/validate/oracles.hpp"

using namespace photon_scatter;
using twg::Triple;

TEST_CASE("simplified F-sum matches the literal permutation sum") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 3.0), ug(0.2, 2.0);
    int done = 0;
    while (done < 60) {
        const TWGParams p(u(rng), ug(rng));
        const Triple k{u(rng), u(rng), u(rng)};
        const double a = u(rng), b = u(rng);
        const Triple q{a, b, k[0] + k[1] + k[2] - a - b};
        double gap = 1e300;
        for (double ki : k)
            for (double qj : q) gap = std::min(gap, std::abs(ki - qj));
        if (gap < 1e-2) continue;
        const Complex lit = validate::literal_three_photon_t(p, k, q);
        CHECK(std::abs(twg::three_photon_connected_t(p, k, q) - lit) <= 1e-10 * std::abs(lit));
        ++done;
    }
}

TEST_CASE("coincident momenta take the limiting value") {
    const TWGParams p(1.0, 1.0);
    const Triple k{1.0, 1.0, 1.0};
    const double q = 0.3;
    const Complex at = twg::three_photon_connected_t(p, k, {1.0 + q, 1.0, 1.0 - q});
    const double eps = 1e-5;
    const Complex above = validate::literal_three_photon_t(p, k, {1.0 + q, 1.0 + eps, 1.0 - q - eps});
    const Complex below = validate::literal_three_photon_t(p, k, {1.0 + q, 1.0 - eps, 1.0 - q + eps});
    CHECK(std::abs(at - 0.5 * (above + below)) < 1e-8 * std::abs(at));

    const Triple k2{0.4, 1.1, 1.7};
    const Complex exact = twg::three_photon_connected_t(p, k2, {0.4, 2.3, 0.5});
    const Complex near = validate::literal_three_photon_t(p, k2, {0.4 + 1e-3, 2.3, 0.5 - 1e-3});
    CHECK(std::abs(exact - near) < 1e-2 * std::abs(exact));
}

TEST_CASE("connected T is symmetric and scales as Gamma cubed") {
    const TWGParams p(3.0, 0.8);
    const Triple k{0.2, 1.4, 0.9};
    const Triple q{1.7, -0.3, 0.2 + 1.4 + 0.9 - 1.7 + 0.3};
    const Complex ref = twg::three_photon_connected_t(p, k, q);
    std::array<int, 3> a{0, 1, 2};
    do {
        std::array<int, 3> b{0, 1, 2};
        do {
            const Complex v = twg::three_photon_connected_t(p, {k[a[0]], k[a[1]], k[a[2]]}, {q[b[0]], q[b[1]], q[b[2]]});
            CHECK(std::abs(v - ref) < 1e-12 * std::abs(ref));
        } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));

    const Complex g1 = twg::three_photon_connected_t(TWGParams(3.0, 1e-3), k, q);
    const Complex g2 = twg::three_photon_connected_t(TWGParams(3.0, 2e-3), k, q);
    CHECK(std::abs(g2 / g1) == doctest::Approx(8.0).epsilon(1e-2));

    CHECK_THROWS_AS(twg::three_photon_connected_t(p, k, {0.0, 0.0, 0.0}), ContractViolation);
}

TEST_CASE("falloff in a large incoming momentum") {
    const TWGParams p(1.0, 1.0);
    const double peak = std::abs(twg::three_photon_connected_t(p, {1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}));
    auto at = [&](double big, bool follow) {
        const Triple k{big, 1.0, 1.0};
        const double e = big + 2.0;
        const Triple q = follow ? Triple{1.2, 0.9, e - 2.1} : Triple{e / 3.0, e / 3.0, e / 3.0};
        return std::abs(twg::three_photon_connected_t(p, k, q));
    };
    // Energy spread over all outgoing legs: fast decay.
    CHECK(at(1e3, false) < 1e-4 * peak);
    // One outgoing leg carrying the large momentum: 1/|k| decay only.
    CHECK(at(1e4, true) / at(1e3, true) == doctest::Approx(0.1).epsilon(1e-2));
    CHECK(at(1e5, true) < 1e-5 * peak);
}

TEST_CASE("three-photon S tiers") {
    const TWGParams p(1.0, 1.0);
    const auto s = twg::three_photon_s(p, {0.3, 1.0, 1.6});
    CHECK(s.disconnected().size() == 6);
    std::size_t mixed = 0, connected = 0;
    for (const auto& c : s.connected()) (c.pins.size() == 1 ? mixed : connected) += 1;
    CHECK(mixed == 9);
    CHECK(connected == 1);
    const std::array<double, 3> pinned{1.6, 0.3, 1.0};
    const Complex ttt = twg::transmission_t(p, 0.3) * twg::transmission_t(p, 1.0) * twg::transmission_t(p, 1.6);
    CHECK(std::abs(s.disconnected_weight_at(pinned) - ttt) < 1e-15);
}

TEST_CASE("fluorescence slice") {
    const TWGParams p(1.0, 1.0);
    const auto on = twg::three_photon_fluorescence_slice(p, {1.0, 1.0, 1.0}, -1.0, 4.0, 41);
    const auto off = twg::three_photon_fluorescence_slice(p, {0.5, 0.3, 2.2}, -1.0, 4.0, 41);
    CHECK(on.max() > off.max());
    CHECK(on.mean() > 0.0);
    // p1 ↔ p2 relabeling of the slice; grid points at p = Ω go through the
    // coincidence rule.
    for (std::size_t i = 0; i < 41; ++i)
        for (std::size_t j = 0; j < 41; ++j)
            CHECK(on.values[i * 41 + j] == doctest::Approx(on.values[j * 41 + i]).epsilon(1e-10));
    CHECK(twg::three_photon_fluorescence(p, {1.0, 1.0, 1.0}, {0.5, 1.5, 1.0}) ==
          doctest::Approx(std::norm(twg::three_photon_connected_t(p, {1.0, 1.0, 1.0}, {0.5, 1.5, 1.0}))));
}

// The windowed quadrature is truncation-limited; 5e-4 is its accuracy at W = 40Γ_T.
TEST_CASE("connected Fourier image: residue closed form against quadrature") {
    const TWGParams p(1.0, 1.0);
    for (const auto& [k, x] : {std::pair{Triple{1.0, 1.0, 1.0}, Triple{0.0, 0.0, 0.0}},
                               std::pair{Triple{0.7, 1.2, 1.05}, Triple{0.8, -0.4, 1.9}}}) {
        const Complex r = twg::three_photon_connected_fourier(p, k, x, twg::ConnectedMethod::Residue);
        const Complex q = twg::three_photon_connected_fourier(p, k, x, twg::ConnectedMethod::Quadrature);
        CHECK(std::abs(r - q) < 5e-4 * std::abs(r));
    }
}

TEST_CASE("three-photon out-state is symmetric in the coordinates") {
    const TWGParams p(1.0, 1.0);
    const Triple k{0.7, 1.2, 1.05};
    const Triple x{0.8, -0.4, 1.9};
    const Complex ref = twg::three_photon_out_wavefunction(p, k, x).total();
    std::array<int, 3> a{0, 1, 2};
    while (std::next_permutation(a.begin(), a.end())) {
        const Complex v = twg::three_photon_out_wavefunction(p, k, {x[a[0]], x[a[1]], x[a[2]]}).total();
        CHECK(std::abs(v - ref) < 1e-12 * std::abs(ref));
    }
}

TEST_CASE("resonant three-photon tiers at the origin") {
    // Tier values at x = 0 for k = (Ω, Ω, Ω), Γ_T = 1, before the common
    // 1/(6(2π)^{3/2}): −6, 72 and −96.
    const TWGParams p(1.0, 1.0);
    const auto a = twg::three_photon_out_wavefunction(p, {1.0, 1.0, 1.0}, {0.0, 0.0, 0.0});
    const double norm = 6.0 * std::pow(2.0 * kPi, 1.5);
    CHECK(std::abs(a.disconnected * norm - (-6.0)) < 1e-10);
    CHECK(std::abs(a.mixed * norm - 72.0) < 1e-10);
    CHECK(std::abs(a.connected * norm - (-96.0)) < 1e-8);
}
