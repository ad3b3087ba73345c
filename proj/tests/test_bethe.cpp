#include <cmath>
#include <random>

#include "doctest.h"
#include "photon_scatter/bethe.hpp"
#include "photon_scatter/twg.hpp"

using namespace photon_scatter;

TEST_CASE("single and two-body phases") {
    const TWGParams p(1.0, 0.8);
    CHECK(std::abs(bethe::single_phase(p, 1.0) + 1.0) < 1e-15);
    CHECK(std::abs(bethe::single_phase(p, 1e8) - 1.0) < 1e-7);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 200; ++i) {
        const double k = u(rng), q = u(rng);
        CHECK(std::abs(bethe::single_phase(p, k) - twg::transmission_t(p, k)) <= 1e-15);
        CHECK(std::abs(std::abs(bethe::two_body_phase(0.8, k, q)) - 1.0) < 1e-15);
    }
    CHECK(std::abs(bethe::two_body_phase(0.8, 0.3, 0.3) + 1.0) < 1e-15);
    CHECK(std::abs(bethe::atom_amplitude(p, 1.0) - std::sqrt(0.8) / Complex(0.0, 0.4)) < 1e-15);
    CHECK_THROWS_AS(bethe::single_particle_wave(p, 1.0, 0.0), DomainError);
    CHECK(std::abs(bethe::single_particle_wave(p, 0.5, -1.0) - std::exp(-0.5 * kI)) < 1e-15);
}

TEST_CASE("permutation amplitudes") {
    const bethe::BetheState two({0.3, 1.1}, 0.8);
    CHECK(two.amplitude({0, 1}) == Complex{1.0, 0.0});
    CHECK(std::abs(two.amplitude({1, 0}) - bethe::two_body_phase(0.8, 1.1, 0.3)) < 1e-15);

    const bethe::BetheState three({0.3, 1.1, -0.6}, 0.8);
    bethe::Permutation a, b;
    const Complex via1 = three.amplitude_via_path({0, 1, 0}, &a);
    const Complex via2 = three.amplitude_via_path({1, 0, 1}, &b);
    CHECK(a == bethe::Permutation{2, 1, 0});
    CHECK(a == b);
    CHECK(std::abs(via1 - via2) < 1e-12);
    CHECK(std::abs(via1 - three.amplitude(a)) < 1e-12);

    const bethe::BetheState four({0.3, 1.1, -0.6, 2.0}, 0.8);
    for (const auto& perm : bethe::all_permutations(4)) CHECK(std::abs(std::abs(four.amplitude(perm)) - 1.0) < 1e-14);
    CHECK(bethe::all_permutations(4).size() == 24);
}

TEST_CASE("eigenstate asymptotics") {
    const TWGParams p(1.0, 0.8);
    const bethe::BetheState one({0.6}, 0.8);
    CHECK(std::abs(one.eigenstate_value(p, {2.0}) - twg::transmission_t(p, 0.6) * std::exp(1.2 * kI)) < 1e-15);

    const bethe::BetheState two({0.3, 1.1}, 0.8);
    const std::vector<double> in{-3.0, -1.0};
    CHECK(std::abs(two.eigenstate_value(p, in) - two.plane_wave_sum(in)) < 1e-15);
    CHECK_THROWS_AS(two.eigenstate_value(p, {-1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(two.eigenstate_value(p, {1.0, -1.0}), ContractViolation);

    const std::vector<double> out{1.0, 2.5};
    const Complex tt = twg::transmission_t(p, 0.3) * twg::transmission_t(p, 1.1);
    CHECK(std::abs(two.eigenstate_value(p, out) - tt * two.plane_wave_sum(out)) < 1e-14);
}
