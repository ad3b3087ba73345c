#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "doctest.h"
#include "photon_scatter/lattice.hpp"
#include "photon_scatter/tcra.hpp"

using namespace photon_scatter;

namespace {

// Scattering ansatz ψ_x = e^{ikx} + r e^{ik|x|} substituted into the site-0
// and atom equations; linear in r.
Complex reflection_oracle(double w, double w0, double j, double v, double k) {
    const double e = w0 - 2.0 * j * std::cos(k);
    const Complex ek = std::exp(kI * k), emk = std::exp(-kI * k);
    const double g = v * v / (e - w);
    // (e − ω₀ − g)(1 + r) + J(e^{ik}(1 + r) + e^{−ik} + r e^{ik}) = 0
    const Complex c0 = (e - w0 - g) + j * (ek + emk);
    const Complex c1 = (e - w0 - g) + 2.0 * j * ek;
    return -c0 / c1;
}

// Real roots of (E − Ω)²((E − ω₀)² − 4J²) − Γ² outside the band with
// sign(E − Ω) = sign(E − ω₀), via the companion matrix.
std::vector<double> bound_roots_oracle(double w, double w0, double j, double gamma) {
    auto mul = [](const std::vector<double>& a, const std::vector<double>& b) {
        std::vector<double> c(a.size() + b.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t k = 0; k < b.size(); ++k) c[i + k] += a[i] * b[k];
        return c;
    };
    // coefficients lowest order first
    const std::vector<double> lin{-w, 1.0};
    const std::vector<double> u{-w0, 1.0};
    auto band = mul(u, u);
    band[0] -= 4.0 * j * j;
    auto poly = mul(mul(lin, lin), band);
    poly[0] -= gamma * gamma;
    const int n = 4;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -poly[i] / poly[n];
    const Eigen::VectorXcd ev = comp.eigenvalues();
    std::vector<double> out;
    for (int i = 0; i < n; ++i) {
        if (std::abs(ev(i).imag()) > 1e-9) continue;
        const double e = ev(i).real();
        if (std::abs(e - w0) <= 2.0 * j) continue;
        if ((e - w) * (e - w0) <= 0.0) continue;
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("reflection amplitude against the scattering ansatz") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uk(0.05, kPi - 0.05), uw(-3.0, 3.0), uj(0.2, 2.0), uv(0.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        const double w = uw(rng), w0 = uw(rng), j = uj(rng), v = uv(rng), k = uk(rng);
        const double e = w0 - 2.0 * j * std::cos(k);
        if (std::abs(e - w) < 1e-6) continue;
        const Complex r = tcra::reflection_amplitude(TCRAParams(w, w0, j, v), k);
        CHECK(std::abs(r - reflection_oracle(w, w0, j, v, k)) < 1e-12);
    }
}

TEST_CASE("reflection amplitude examples") {
    const TCRAParams p(kPi, kPi, 1.0, 1.0);
    const Complex r = tcra::reflection_amplitude(p, kPi / 3.0);
    CHECK(std::norm(r) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(std::abs(r - (-kI / (-std::sqrt(3.0) + kI))) < 1e-15);
    CHECK(std::abs(tcra::reflection_amplitude(p, kPi / 2.0) + 1.0) < 1e-15);
    CHECK(std::abs(tcra::transmission_amplitude(p, kPi / 2.0)) < 1e-15);
    CHECK(std::abs(tcra::reflection_amplitude(TCRAParams(kPi, kPi, 1.0, 0.0), 0.7)) == 0.0);
    CHECK_THROWS_AS(tcra::reflection_amplitude(p, 0.0), DomainError);
    CHECK_THROWS_AS(tcra::reflection_amplitude(p, kPi), DomainError);
}

TEST_CASE("single-photon S matrix weights") {
    const TCRAParams p(kPi, kPi, 1.0, 1.0);
    const auto s = tcra::single_photon_s_matrix(p, kPi / 2.0);
    const std::array<double, 1> fwd{kPi / 2.0}, back{-kPi / 2.0};
    CHECK(std::abs(s.disconnected_weight_at(fwd)) < 1e-15);
    CHECK(std::abs(s.disconnected_weight_at(back) + 1.0) < 1e-15);
    CHECK(s.connected().empty());
    const auto free = tcra::single_photon_s_matrix(TCRAParams(kPi, kPi, 1.0, 0.0), 1.0);
    const std::array<double, 1> one{1.0};
    CHECK(free.disconnected_weight_at(one) == Complex{1.0, 0.0});
}

TEST_CASE("self energy") {
    const TCRAParams p(0.0, kPi, 1.0, 1.0);
    const auto mid = tcra::self_energy(p, kPi);
    CHECK(mid.dos == doctest::Approx(1.0));
    CHECK(mid.real_part == 0.0);
    const auto out = tcra::self_energy(p, kPi + 3.0);
    CHECK(out.real_part == doctest::Approx(-1.0 / std::sqrt(5.0)).epsilon(1e-14));
    CHECK(std::abs(tcra::self_energy(p, 1e9).value()) < 1e-8);
    CHECK_THROWS_AS(tcra::self_energy(p, kPi + 2.0), DomainError);
}

TEST_CASE("bound-state energies against the quartic") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uw(-4.0, 4.0), uj(0.3, 2.0), uv(0.1, 2.0);
    for (int i = 0; i < 100; ++i) {
        const double w = uw(rng), w0 = uw(rng), j = uj(rng), v = uv(rng);
        const TCRAParams p(w, w0, j, v);
        const auto b = tcra::bound_state_energies(p);
        const auto roots = bound_roots_oracle(w, w0, j, v * v);
        REQUIRE(roots.size() == 2);
        CHECK(std::abs(b.lower.energy - roots[0]) < 1e-9 * std::max(1.0, std::abs(roots[0])));
        CHECK(std::abs(b.upper.energy - roots[1]) < 1e-9 * std::max(1.0, std::abs(roots[1])));
        for (double e : {b.lower.energy, b.upper.energy}) {
            const double d = 1e-12 * std::max(1.0, std::abs(e));
            CHECK(tcra::bound_state_residual(p, e - d) * tcra::bound_state_residual(p, e + d) <= 0.0);
        }
    }
}

TEST_CASE("bound-state closed form at the band center") {
    const double w0 = 0.7;
    const TCRAParams p(w0, w0, 1.0, 1.0);
    const auto b = tcra::bound_state_energies(p);
    const double x = std::sqrt(2.0 + std::sqrt(5.0));
    CHECK(std::abs(b.upper.energy - (w0 + x)) < 1e-12);
    CHECK(std::abs(b.lower.energy - (w0 - x)) < 1e-12);
    CHECK(std::abs(b.upper.energy + b.lower.energy - 2.0 * w0) < 1e-12);
    CHECK(b.lower.kappa() == doctest::Approx(0.786151).epsilon(1e-6));
    CHECK(b.lower.decay_log == doctest::Approx(-0.240606).epsilon(1e-5));
    CHECK(b.upper.sign_alternating);
    CHECK_FALSE(b.lower.sign_alternating);

    const double psi0 = tcra::bound_state_wavefunction(b.lower, p, 0);
    CHECK(psi0 == doctest::Approx(1.0 / std::sqrt(x * x - 4.0)).epsilon(1e-14));
    CHECK(tcra::bound_state_wavefunction(b.lower, p, 5) / psi0 == doctest::Approx(std::exp(-1.20303)).epsilon(1e-5));
    for (long s = 0; s < 10; ++s) {
        const double ratio = tcra::bound_state_wavefunction(b.upper, p, s + 1) / tcra::bound_state_wavefunction(b.upper, p, s);
        CHECK(ratio == doctest::Approx(-b.upper.kappa()).epsilon(1e-13));
    }
    CHECK_THROWS_AS(tcra::bound_state_wavefunction(b.upper, TCRAParams(w0, w0, 1.0, 2.0), 0), ContractViolation);
}

TEST_CASE("bound-state wavefunction solves the lattice equations") {
    const TCRAParams p(1.3, 0.4, 0.8, 1.1);
    const auto pair = tcra::bound_state_energies(p);
    for (const auto* b : {&pair.lower, &pair.upper}) {
        const double e_atom = p.coupling() * tcra::bound_state_wavefunction(*b, p, 0) / (b->energy - p.omega_atom());
        for (long x = -6; x <= 6; ++x) {
            const double psi = tcra::bound_state_wavefunction(*b, p, x);
            double h = p.omega_cavity() * psi - p.hopping() * (tcra::bound_state_wavefunction(*b, p, x - 1) +
                                                               tcra::bound_state_wavefunction(*b, p, x + 1));
            if (x == 0) h += p.coupling() * e_atom;
            CHECK(std::abs(h - b->energy * psi) < 1e-12);
        }
    }
}

TEST_CASE("bound-state band-edge limit") {
    const TCRAParams p(0.3, 0.0, 1.0, 1e-3);
    const auto b = tcra::bound_state_energies(p);
    CHECK(b.upper.energy > 2.0);
    CHECK(b.lower.energy < -2.0);
    CHECK(b.upper.energy - 2.0 < 1e-5);
    CHECK(-2.0 - b.lower.energy < 1e-5);
}

TEST_CASE("finite-size convergence of the bound-state energy") {
    const TCRAParams p(0.5, 0.0, 1.0, 0.3);
    const auto exact = tcra::bound_state_energies(p);
    double last = 1e300;
    for (long l : {201L, 601L, 2001L}) {
        const auto r = lattice::bound_state_check(lattice::LatticeModel(l, p), 20);
        const double err = std::abs(r.upper_energy - exact.upper.energy) + std::abs(r.lower_energy - exact.lower.energy);
        CHECK(err <= last);
        last = err;
    }
    CHECK(last < 1e-6);
}
