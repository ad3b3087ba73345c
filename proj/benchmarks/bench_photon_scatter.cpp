#include <benchmark/benchmark.h>

#include "photon_scatter/lattice.hpp"
#include "photon_scatter/three_photon.hpp"
#include "photon_scatter/validate/oracles.hpp"

namespace ps = photon_scatter;

namespace {

const ps::TWGParams kParams(1.0, 1.0);
const ps::twg::Triple kIn{0.7, 1.2, 1.05};
const ps::twg::Triple kOut{0.4, 1.9, 0.65};

void BM_ConnectedTSimplified(benchmark::State& state) {
    const ps::twg::ThreePhotonConnectedT t(kParams, kIn);
    for (auto _ : state) benchmark::DoNotOptimize(t(kOut));
}
BENCHMARK(BM_ConnectedTSimplified);

void BM_ConnectedTLiteral(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ps::validate::literal_three_photon_t(kParams, kIn, kOut));
}
BENCHMARK(BM_ConnectedTLiteral);

void BM_ConnectedTCoincident(benchmark::State& state) {
    const ps::twg::ThreePhotonConnectedT t(kParams, {1.0, 1.0, 1.0});
    for (auto _ : state) benchmark::DoNotOptimize(t({1.3, 1.0, 0.7}));
}
BENCHMARK(BM_ConnectedTCoincident);

void BM_FourierResidue(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(ps::twg::three_photon_connected_fourier(kParams, kIn, {0.8, -0.4, 1.9},
                                                                         ps::twg::ConnectedMethod::Residue));
}
BENCHMARK(BM_FourierResidue);

void BM_FourierQuadrature(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(ps::twg::three_photon_connected_fourier(kParams, kIn, {0.8, -0.4, 1.9},
                                                                         ps::twg::ConnectedMethod::Quadrature));
}
BENCHMARK(BM_FourierQuadrature)->Unit(benchmark::kMillisecond)->Iterations(2);

void BM_WavepacketEigenbasis(benchmark::State& state) {
    const ps::lattice::LatticeModel m(state.range(0), ps::TCRAParams(3.0, 3.0, 1.0, 1.0));
    ps::lattice::WavepacketOptions o;
    for (auto _ : state) benchmark::DoNotOptimize(ps::lattice::wavepacket_scatter(m, o));
}
BENCHMARK(BM_WavepacketEigenbasis)->Arg(801)->Arg(1601)->Unit(benchmark::kMillisecond);

void BM_ChebyshevTwoExcitation(benchmark::State& state) {
    const ps::lattice::LatticeModel m(state.range(0), ps::TCRAParams(3.0, 3.0, 1.0, 1.0));
    const auto h = ps::lattice::build_two_excitation(m);
    const auto [lo, hi] = ps::lattice::spectral_bounds(h);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(h.rows());
    psi(h.rows() / 3) = 1.0;
    for (auto _ : state) benchmark::DoNotOptimize(ps::lattice::chebyshev_propagate(h, psi, 50.0, lo, hi));
}
BENCHMARK(BM_ChebyshevTwoExcitation)->Arg(101)->Arg(201)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
