#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "photon_scatter/amplitude_set.hpp"
#include "photon_scatter/parallel.hpp"
#include "photon_scatter/types.hpp"

using namespace photon_scatter;

TEST_CASE("dispersion on the cosine and linear bands") {
    CHECK(dispersion_eval(CosineBand{kPi, 1.0}, kPi / 2.0) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(dispersion_eval(CosineBand{kPi, 1.0}, 0.0) == doctest::Approx(kPi - 2.0).epsilon(1e-15));
    CHECK(dispersion_eval(LinearBand{1.0}, -0.7) == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("even/odd mixing") {
    const double s = 1.0 / std::sqrt(2.0);
    const EoMixing m = eo_decompose(1.0);
    CHECK(m.matrix[0][0] == doctest::Approx(s));
    CHECK(m.matrix[0][1] == doctest::Approx(s));
    CHECK(m.matrix[1][0] == doctest::Approx(s));
    CHECK(m.matrix[1][1] == doctest::Approx(-s));

    const EoMixing id = m.compose(m.inverse());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(std::abs(id.matrix[i][j] - (i == j ? 1.0 : 0.0)) < 1e-15);

    const Complex c{0.3, -1.2};
    const auto eo = m.apply(c, c);
    CHECK(std::abs(eo[0] - std::sqrt(2.0) * c) < 1e-15);
    CHECK(std::abs(eo[1]) < 1e-15);

    CHECK_THROWS_AS(eo_decompose(0.0), ContractViolation);
}

TEST_CASE("two-photon kinematics round trip") {
    const auto kin = TwoPhotonKinematics::from_lab(1.3, -0.4, 2.5, 7.25);
    const auto k = kin.momenta();
    const auto x = kin.positions();
    CHECK(k[0] == doctest::Approx(1.3).epsilon(1e-15));
    CHECK(k[1] == doctest::Approx(-0.4).epsilon(1e-15));
    CHECK(x[0] == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(x[1] == doctest::Approx(7.25).epsilon(1e-15));
}

TEST_CASE("parameter records reject invalid values") {
    CHECK_THROWS_AS(TWGParams(1.0, 0.0), ContractViolation);
    CHECK_THROWS_AS(TCRAParams(1.0, 1.0, 0.0, 1.0), ContractViolation);
    const HWGParams h(1.0, 1.0, 2.0);
    CHECK(h.gamma_e() == doctest::Approx(5.0));
    CHECK(h.swapped().vbar1() == 2.0);
    CHECK(h.swapped().vbar2() == 1.0);
}

TEST_CASE("amplitude set bookkeeping") {
    ScatteringAmplitudeSet s(2, 3.0);
    s.add_disconnected({{0, 1.0}, {1, 2.0}}, Complex{0.5, 0.0});
    s.add_connected({}, 2.0, [](std::span<const double> p) { return Complex{p[0], 0.0}; });
    const std::array<double, 2> on{1.0, 2.0};
    const std::array<double, 2> off{1.0, 2.5};
    CHECK(s.disconnected_weight_at(on) == Complex{0.5, 0.0});
    CHECK(s.connected_density(on) == Complex{2.0, 0.0});
    CHECK(s.on_shell(on));
    CHECK_FALSE(s.on_shell(off));
    CHECK_THROWS_AS(s.connected_density(off), ContractViolation);
}

TEST_CASE("parallel map is ordered and rethrows") {
    const auto v = parallel_map<double>(1000, [](std::size_t i) { return static_cast<double>(i * i); });
    for (std::size_t i = 0; i < v.size(); ++i) REQUIRE(v[i] == static_cast<double>(i * i));
    CHECK_THROWS_AS(parallel_map<double>(64,
                                         [](std::size_t i) -> double {
                                             if (i == 37) throw DomainError("boom");
                                             return 0.0;
                                         }),
                    DomainError);
}
