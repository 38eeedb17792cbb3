#include <benchmark/benchmark.h>

#include <cmath>

#include "casimir/cavity.hpp"
#include "casimir/force.hpp"
#include "casimir/fresnel.hpp"
#include "casimir/greens.hpp"

using namespace casimir;

namespace {

const Material kGold = Drude{1.37e16, 5.32e13};

Stack five_layer() {
  return Stack({Layer::half_space(kGold), Layer::slab(Vacuum{}, 5e-7), Layer::slab(kGold, 2e-8),
                Layer::slab(Vacuum{}, 3e-7), Layer::half_space(kGold)});
}

void BM_StackReflectionImag(benchmark::State& state) {
  const Stack s = five_layer();
  StackModes<ImagAxis> modes(s, 3e14);
  double k = 1e5;
  for (auto _ : state) {
    modes.set_k(k);
    benchmark::DoNotOptimize(modes.reflection(1, Side::plus, Polarization::p));
    k = k < 1e7 ? k * 1.01 : 1e5;
  }
}
BENCHMARK(BM_StackReflectionImag);

void BM_StackReflectionReal(benchmark::State& state) {
  const Stack s = five_layer();
  StackModes<RealAxis> modes(s, 1e15);
  double k = 1e5;
  for (auto _ : state) {
    modes.set_k(k);
    benchmark::DoNotOptimize(modes.reflection(1, Side::plus, Polarization::p));
    k = k < 1e7 ? k * 1.01 : 1e5;
  }
}
BENCHMARK(BM_StackReflectionReal);

void BM_IdealCavityForce(benchmark::State& state) {
  const Stack s({Layer::half_space(PerfectConductor{}), Layer::slab(Vacuum{}, 1e-6),
                 Layer::half_space(PerfectConductor{})});
  for (auto _ : state) benchmark::DoNotOptimize(force_per_area(s, 1).f_minus);
}
BENCHMARK(BM_IdealCavityForce)->Unit(benchmark::kMillisecond);

void BM_FiveLayerForce(benchmark::State& state) {
  const Stack s = five_layer();
  const QuadratureSpec spec{std::pow(10.0, -static_cast<double>(state.range(0)))};
  for (auto _ : state) benchmark::DoNotOptimize(force_per_area(s, 1, spec).f_minus);
}
BENCHMARK(BM_FiveLayerForce)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SlabInCavity(benchmark::State& state) {
  CavityConfig c;
  c.slab = kGold;
  c.slab_thickness = 1e-7;
  c.d1 = 1e-6;
  c.d2 = 5e-7;
  for (auto _ : state) benchmark::DoNotOptimize(slab_in_cavity_force(c).force);
}
BENCHMARK(BM_SlabInCavity)->Unit(benchmark::kMillisecond);

void BM_VerifyGreens(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_greens().max_z_variation);
}
BENCHMARK(BM_VerifyGreens)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
