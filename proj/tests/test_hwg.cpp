#include <cmath>
#include <random>

#include "doctest.h"
#include "photon_scatter/hwg.hpp"
#include "photon_scatter/lattice.hpp"
#include "photon_scatter/twg.hpp"

using namespace photon_scatter;
using hwg::Pair;

TEST_CASE("channel amplitudes") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> uv(0.0, 4.0), uk(-6.0, 8.0);
    for (int i = 0; i < 300; ++i) {
        const HWGParams p(1.0, uv(rng) + 1e-3, uv(rng));
        const double k = uk(rng);
        const auto a = hwg::channel_amplitudes(p, k);
        const auto b = hwg::channel_amplitudes(p.swapped(), k);
        CHECK(std::abs(std::norm(a.t11) + std::norm(a.t21) - 1.0) < 1e-12);
        CHECK(std::abs(std::norm(a.t22) + std::norm(a.t21) - 1.0) < 1e-12);
        // unitarity of [[t11, t21], [t21, t22]]
        CHECK(std::abs(std::conj(a.t11) * a.t21 + std::conj(a.t21) * a.t22) < 1e-12);
        CHECK(std::abs(b.t11 - a.t22) < 1e-15);
        CHECK(std::abs(b.t21 - a.t21) < 1e-15);
    }

    const auto eq = hwg::channel_amplitudes(HWGParams(1.0, 2.0, 2.0), 1.0);
    CHECK(std::abs(eq.t11) < 1e-15);
    CHECK(std::abs(std::abs(eq.t21) - 1.0) < 1e-15);

    const auto un = hwg::channel_amplitudes(HWGParams(1.0, 1.0, 2.0), 1.0);
    CHECK(std::abs(un.t11 - 0.6) < 1e-15);
    CHECK(std::abs(un.t21 + 0.8) < 1e-15);

    const TWGParams t(0.4, 1.69);
    for (double k : {-1.0, 0.4, 2.0}) {
        const auto d = hwg::channel_amplitudes(HWGParams(0.4, 1.3, 0.0), k);
        CHECK(std::abs(d.t21) == 0.0);
        CHECK(std::abs(d.t11 - twg::transmission_t(t, k)) < 1e-15);
    }

    CHECK_THROWS_AS(hwg::channel_amplitudes(HWGParams(1.0, 1.0, 1.0, 2.0, 1.0), 1.0), ContractViolation);
}

TEST_CASE("two-photon H-type T density") {
    const HWGParams p(0.9, 1.1, 0.7);
    using C = Channel;
    const double k1 = 0.4, k2 = 1.3, p1 = 0.2, p2 = 1.5;
    const Complex a = p.alpha_h();
    const double v1 = 1.1, v2 = 0.7;
    const Complex literal = kI * v1 * v2 * v2 * v1 * (k1 + k2 - 2.0 * a) /
                            (kPi * (p2 - a) * (k1 - a) * (p1 - a) * (k2 - a));
    CHECK(std::abs(hwg::two_photon_t_h(p, {C::One, C::Two, C::Two, C::One}, k1, k2, p1, p2) - literal) < 1e-15);

    const Complex t11 = hwg::two_photon_t_h(p, {C::One, C::Two, C::One, C::One}, k1, k2, p1, p2);
    const Complex t22 = hwg::two_photon_t_h(p, {C::One, C::Two, C::Two, C::Two}, k1, k2, p1, p2);
    CHECK(std::abs(t11 / t22 - (v1 / v2) * (v1 / v2)) < 1e-14);

    const HWGParams single(0.9, 1.1, 0.0);
    const Complex reduced = hwg::two_photon_t_h(single, {C::One, C::One, C::One, C::One}, k1, k2, p1, p2);
    CHECK(std::abs(reduced - twg::two_photon_t(TWGParams(0.9, 1.21), k1, k2, p1, p2)) < 1e-14);

    CHECK(std::abs(hwg::two_photon_t_h(p, {C::One, C::Two, C::One, C::Two}, k1, k2, p1, p2) -
                   hwg::two_photon_t_h(p, {C::Two, C::One, C::One, C::Two}, k2, k1, p1, p2)) < 1e-15);
    CHECK_THROWS_AS(hwg::two_photon_t_h(p, {C::One, C::Two, C::One, C::Two}, k1, k2, p1, 0.0), ContractViolation);
}

TEST_CASE("finite-ring unitarity of the two-photon H-type S matrix") {
    const HWGParams p(1.0, 1.0, 1.4);
    const long l = 401;
    const auto r = lattice::ring_h_two_photon_probability(p, l, 66, 58, 2e4);
    CHECK(std::abs(r.total() - 1.0) < 1e-3);
    CHECK_THROWS_AS(lattice::ring_h_two_photon_probability(p, l, 60, 60, 10.0), ContractViolation);
}

TEST_CASE("two-photon H-type S structure") {
    const HWGParams p(1.0, 1.0, 2.0);
    const auto s = hwg::two_photon_s_h(p, 0.7, 1.2);
    const auto a1 = hwg::channel_amplitudes(p, 0.7), a2 = hwg::channel_amplitudes(p, 1.2);
    const std::array<double, 2> direct{0.7, 1.2}, exchange{1.2, 0.7};
    CHECK(std::abs(s.s12.disconnected_weight_at(direct) - a1.t11 * a2.t22) < 1e-15);
    CHECK(std::abs(s.s12.disconnected_weight_at(exchange) - a1.t21 * a2.t21) < 1e-15);
    const std::array<double, 2> q{0.5, 1.4};
    CHECK(std::abs(s.s11.connected_density(q) / s.s22.connected_density(q) - 0.25) < 1e-14);

    const auto d = hwg::two_photon_s_h(HWGParams(1.0, 1.0, 0.0), 0.7, 1.2);
    const auto b1 = hwg::channel_amplitudes(HWGParams(1.0, 1.0, 0.0), 0.7);
    CHECK(std::abs(d.s12.disconnected_weight_at(direct) - b1.t11) < 1e-15);
    CHECK(std::abs(d.s12.connected_density(q)) == 0.0);
}

TEST_CASE("pair correlations") {
    const HWGParams eq(1.0, 2.0, 2.0);
    const auto g = hwg::pair_wavefunctions(eq, 1.0, 1.0);
    for (int i = -50; i <= 50; ++i) {
        const double x = 0.2 * i;
        CHECK(std::norm(g.g11(x)) == doctest::Approx(std::norm(g.g22(x))).epsilon(1e-13));
        CHECK(hwg::second_order_correlation(eq, Pair::P12, 1.0, 1.0, x) == std::norm(g.g12(x)));
        CHECK(hwg::second_order_correlation(eq, Pair::P11, 1.0, 1.0, x) >= 0.0);
    }
    CHECK(std::norm(g.g11(0.0)) > std::norm(g.g11(50.0)));

    const HWGParams p(1.0, 1.0, 2.0);
    const auto h = hwg::pair_wavefunctions(p, 1.6, 0.4);
    for (auto pr : {Pair::P11, Pair::P12, Pair::P22}) {
        const double x = 1.3;
        CHECK(std::abs(h.bound_term(pr, 2.0 * x) / h.bound_term(pr, x) - std::exp(-p.gamma_e() * x / 2.0)) < 1e-14);
        CHECK(std::abs(h.bound_term(pr, 80.0)) < 1e-30);
    }
    const auto a1 = hwg::channel_amplitudes(p, 1.6), a2 = hwg::channel_amplitudes(p, 0.4);
    CHECK(std::abs(std::abs(h.g11(80.0)) - std::abs(a1.t11 * a2.t21 * std::cos(0.6 * 80.0)) / (2.0 * kPi)) < 1e-14);
}
