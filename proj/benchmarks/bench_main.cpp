#include <benchmark/benchmark.h>

#include "intpts/elliptic.hpp"
#include "intpts/genus0.hpp"
#include "intpts/parse.hpp"
#include "intpts/sweeps.hpp"
#include "intpts/weil.hpp"

using namespace intpts;

namespace {

Subscheme seven() {
  return parse_subscheme("point [1:0:0]; point [0:1:0]; point [0:0:1]; point [1:1:0]; "
                         "point [1:0:1]; point [0:1:1]; point [1:1:1]");
}

void BM_LocalWeil(benchmark::State& state) {
  Subscheme d = seven();
  ProjPoint p = ProjPoint::from_integers({BigInt(1) << static_cast<unsigned>(state.range(0)), 6, 10});
  for (auto _ : state) benchmark::DoNotOptimize(local_weil(d, p, Place::finite(2)));
}
BENCHMARK(BM_LocalWeil)->Arg(8)->Arg(64)->Arg(512);

void BM_MinimalLevels(benchmark::State& state) {
  Subscheme d = seven();
  ProjPoint p = ProjPoint::from_integers({123457, 2 * 123457 + 1, 3 * 123457 - 1});
  for (auto _ : state) benchmark::DoNotOptimize(minimal_levels(d, p));
}
BENCHMARK(BM_MinimalLevels);

void BM_EllMul(benchmark::State& state) {
  EllCurveQ e(0, -2);
  EllPointQ p(Rational(3), Rational(5));
  for (auto _ : state) benchmark::DoNotOptimize(ell_mul(e, state.range(0), p));
}
BENCHMARK(BM_EllMul)->Arg(8)->Arg(32)->Arg(128);

void BM_SearchGenus0(benchmark::State& state) {
  Subscheme d = seven();
  CurveMap phi = parse_curve("degree 1; form s; form 2*s + t; form 3*s - t");
  ProjPoint base = ProjPoint::from_integers({1, 0});
  LevelVector l = minimal_levels(d, phi.at(base));
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_genus0(phi, d, base, l, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_SearchGenus0)->Arg(20)->Arg(100);

void BM_ExactRank(benchmark::State& state) {
  Subscheme d = seven();
  PointCloud cloud =
      everywhere_sweep(ProjectiveSpace{2}, d, ProjPoint::from_integers({1, 2, 3}), {5, 20, 64, 200});
  std::vector<ProjPoint> pts;
  for (const auto& p : cloud.points) pts.push_back(p.point);
  for (auto _ : state) {
    benchmark::DoNotOptimize(density_certificate(pts, 2, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_ExactRank)->Arg(2)->Arg(3)->Arg(4);

}  // namespace
BENCHMARK_MAIN();
