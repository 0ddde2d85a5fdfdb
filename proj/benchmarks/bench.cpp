#include "hopfbraid/combinatorics.hpp"
#include "hopfbraid/drinfeld.hpp"
#include "hopfbraid/rmatrix.hpp"
#include "hopfbraid/suites.hpp"

#include <benchmark/benchmark.h>

using namespace hopfbraid;

namespace {

Series dense_series(int order) {
    Series s(order);
    for (int k = 0; k < order; ++k)
        s += Series::h_power(k, order) * Rational(2 * k + 1);
    return s;
}

void bm_series_mul(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const Series a = dense_series(order);
    const Series b = dense_series(order).inverse();
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_series_mul)->Arg(5)->Arg(8)->Arg(16);

void bm_normal_multiply(benchmark::State& state) {
    const HopfAlgebra alg = HopfAlgebra::uhsl2(static_cast<int>(state.range(0)));
    const AlgebraElement x = alg.e() * alg.f() * alg.h();
    const AlgebraElement y = alg.f() * alg.e() * alg.e();
    for (auto _ : state)
        benchmark::DoNotOptimize(x * y);
}
BENCHMARK(bm_normal_multiply)->Arg(4)->Arg(5)->Arg(6);

void bm_coproduct_power(benchmark::State& state) {
    const HopfAlgebra alg = HopfAlgebra::uhsl2(5);
    const AlgebraElement x = alg.e() * alg.f();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(delta_power(x, n));
}
BENCHMARK(bm_coproduct_power)->Arg(2)->Arg(3)->Arg(4);

void bm_delta_full(benchmark::State& state) {
    // the 2^n subset sum that dominates membership certification
    const HopfAlgebra alg = HopfAlgebra::uhsl2(5);
    const AlgebraElement x = alg.e().scaled(Series::h_power(1, 5));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(delta_full(x, n));
}
BENCHMARK(bm_delta_full)->Arg(3)->Arg(4)->Arg(5);

void bm_build_r(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const HopfAlgebra alg = HopfAlgebra::uhsl2(order);
        benchmark::DoNotOptimize(RMatrix::build(alg));
    }
}
BENCHMARK(bm_build_r)->Arg(4)->Arg(5)->Arg(6);

void bm_ad_r(benchmark::State& state) {
    const HopfAlgebra alg = HopfAlgebra::uhsl2(5);
    const RMatrix r = RMatrix::build(alg);
    const Series h = Series::h_power(1, 5);
    const TensorElement x =
        alg.e().scaled(h).as_tensor().tensor_product(alg.f().scaled(h).as_tensor());
    for (auto _ : state)
        benchmark::DoNotOptimize(ad_r(r, x));
}
BENCHMARK(bm_ad_r);

void bm_certify_tensor(benchmark::State& state) {
    const HopfAlgebra alg = HopfAlgebra::uhsl2(5);
    const RMatrix r = RMatrix::build(alg);
    const Series h = Series::h_power(1, 5);
    const TensorElement x =
        alg.e().scaled(h).as_tensor().tensor_product(alg.f().scaled(h).as_tensor());
    const TensorElement image = ad_r(r, x);
    for (auto _ : state)
        benchmark::DoNotOptimize(certify_hprime_tensor2(image, 5));
}
BENCHMARK(bm_certify_tensor);

void bm_r_sigma_full(benchmark::State& state) {
    const HopfAlgebra alg = HopfAlgebra::uhsl2(4);
    const RMatrix r = RMatrix::build(alg);
    const Subset sigma = Subset::full(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(r_sigma(r, sigma));
}
BENCHMARK(bm_r_sigma_full);

void bm_eprime_scan(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(eprime_scan(n));
}
BENCHMARK(bm_eprime_scan)->Arg(5)->Arg(6);

} // namespace

BENCHMARK_MAIN();
