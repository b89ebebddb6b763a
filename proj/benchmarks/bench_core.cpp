#include <benchmark/benchmark.h>

#include "reduct/classical.hpp"

using namespace reduct;

namespace {

const std::vector<std::string> NAMES = {"x1", "x2", "x3", "y1", "y2", "y3"};

Polynomial dense_poly(unsigned degree) {
  Polynomial p(6);
  Rational c = 1;
  for (const auto& m : monomials_up_to(6, degree)) {
    p.add_term(m, c);
    c += Rational(1, 3);
  }
  return p;
}

PoissonBivector plane_bivector() {
  PoissonBivector pi(6);
  pi.set(2, 5, Polynomial::constant(6, 1));
  pi.set(3, 4, parse_polynomial("x3", NAMES));
  return pi;
}

void BM_PolynomialMultiply(benchmark::State& state) {
  Polynomial f = dense_poly(static_cast<unsigned>(state.range(0)));
  Polynomial g = dense_poly(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_PolynomialMultiply)->Arg(2)->Arg(3)->Arg(4);

void BM_Bracket(benchmark::State& state) {
  PoissonBivector pi = PoissonBivector::canonical(3);
  Polynomial f = dense_poly(static_cast<unsigned>(state.range(0)));
  Polynomial g = dense_poly(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bracket(pi, f, g));
}
BENCHMARK(BM_Bracket)->Arg(2)->Arg(3)->Arg(4);

void BM_Truncate(benchmark::State& state) {
  StructuredSpace b = StructuredSpace::restricted_invariant_space(
      {[] {
         PolyVectorField x(6);
         x.set_component(0, Polynomial::constant(6, 1));
         return x;
       }(),
       [] {
         PolyVectorField x(6);
         x.set_component(1, Polynomial::constant(6, 1));
         x.set_component(3, -parse_polynomial("x3", NAMES));
         return x;
       }()},
      {0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(b.truncate(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Truncate)->Arg(2)->Arg(3)->Arg(4);

void BM_CheckJacobi(benchmark::State& state) {
  PoissonBivector pi = plane_bivector();
  for (auto _ : state) benchmark::DoNotOptimize(check_jacobi(pi, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_CheckJacobi)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
