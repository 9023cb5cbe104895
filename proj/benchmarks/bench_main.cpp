#include <benchmark/benchmark.h>

#include <hypertorsion/hypertorsion.hpp>

using namespace hypertorsion;

namespace {

void BM_FieldMul(benchmark::State& st) {
    const Field f = Field::extension(3, 4);
    Elem a = f.from_index(17), b = f.from_index(53);
    for (auto _ : st) {
        a = a * b + b;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul);

void BM_PolyMul(benchmark::State& st) {
    const Field f = Field::prime(1000003);
    const auto d = static_cast<std::size_t>(st.range(0));
    std::vector<Elem> c;
    for (std::size_t i = 0; i <= d; ++i) c.push_back(f.from_int(static_cast<std::int64_t>(7 * i + 1)));
    const Poly a(f, c);
    for (auto _ : st) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_PolyMul)->Arg(16)->Arg(128)->Arg(512);

void BM_PolyGcdQ(benchmark::State& st) {
    const Field q = Field::rationals();
    const auto n = static_cast<unsigned>(st.range(0));
    const Poly a = pow(parse_poly("x+1", q), n) * parse_poly("x-2/3", q);
    const Poly b = pow(parse_poly("x+1", q), n / 2) * parse_poly("7x^2+1", q);
    for (auto _ : st) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolyGcdQ)->Arg(16)->Arg(64);

void BM_CantorAdd(benchmark::State& st) {
    const Field f = Field::prime(1000003);
    const unsigned g = static_cast<unsigned>(st.range(0));
    const SingleCurve sc = make_single(f, g, f.zero(), Poly::constant(f.one()) + Poly::x(f));
    const Mumford p = embed(sc.curve, sc.P);
    Mumford d = cantor_add(sc.curve, p, p);
    for (auto _ : st) {
        d = cantor_add(sc.curve, d, p);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_CantorAdd)->Arg(2)->Arg(7)->Arg(52);

void BM_Census(benchmark::State& st) {
    const Field f = Field::extension(5, static_cast<unsigned>(st.range(0)));
    const Curve c = Curve::make(2, parse_poly("x^5+(x+1)^2", f));
    for (auto _ : st) benchmark::DoNotOptimize(torsion_census(c, 5));
}
BENCHMARK(BM_Census)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_HyperellipticScan(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(hyperelliptic_scan(static_cast<std::uint64_t>(st.range(0))));
}
BENCHMARK(BM_HyperellipticScan)->Arg(201)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_RationalGenus52(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(rational_four_torsion(52));
}
BENCHMARK(BM_RationalGenus52)->Unit(benchmark::kSecond)->Iterations(1);

} // namespace

BENCHMARK_MAIN();
