#include <benchmark/benchmark.h>

#include "tpe/families.hpp"

using namespace tpe;

namespace {

void BM_CantorScalarMulFp(benchmark::State& state) {
    auto c = make_curve(poly_q({1, 1, 0, 0, 0, 1}));
    auto J = reduced_jacobian(c, 1000003);
    PrimeField k(1000003);
    auto d = J.point(k.zero(), k.one());
    const Integer n("1234567890123456789");
    for (auto _ : state) benchmark::DoNotOptimize(J.scalar_mul(n, d));
}
BENCHMARK(BM_CantorScalarMulFp)->Unit(benchmark::kMicrosecond);

void BM_TowerMultiply40(benchmark::State& state) {
    auto t = TowerSpec::make({{"z", cyclotomic(5)}, {"s", poly_q({-12, 0, 1})}, {"u", poly_q({-12, 0, 0, 0, 0, 1})}});
    auto z = TowerElement::generator(t, "z"), s = TowerElement::generator(t, "s"), u = TowerElement::generator(t, "u");
    auto a = z + s * u + TowerElement(t, make_rational(3, 7));
    auto b = z * z - u.pow(3) + s;
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_TowerMultiply40);

void BM_CountPoints(benchmark::State& state) {
    auto c = make_curve(poly_q({18, 0, 0, 0, 0, 1}));
    const auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_points_mod_p(c, p));
}
BENCHMARK(BM_CountPoints)->Arg(11)->Arg(1009)->Arg(100003);

void BM_VerifyCd12(benchmark::State& state) {
    auto doc = generate_cd(12).document();
    for (auto _ : state) benchmark::DoNotOptimize(verify_tpe(doc).passed());
}
BENCHMARK(BM_VerifyCd12)->Unit(benchmark::kMillisecond);

void BM_TorsionDecideSqrt15(benchmark::State& state) {
    auto t = TowerSpec::make({{"s", poly_q({-15, 0, 1})}});
    auto c = make_curve(poly_q({12, 4, -15, -5, 3, 1}));
    CurvePoint p = AffinePoint{TowerElement(t, Rational(3)), TowerElement(t, Rational(4)) * TowerElement::generator(t, "s")};
    auto w = split_places(*t, 7).front();
    for (auto _ : state) benchmark::DoNotOptimize(torsion_decide(p, c, t, w));
}
BENCHMARK(BM_TorsionDecideSqrt15)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
