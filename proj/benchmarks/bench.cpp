#include <benchmark/benchmark.h>

#include "hopfcert/hopf.hpp"

using namespace hopfcert;

static Braiding minus_flip(int n) {
  FieldSpec Q = FieldSpec::rationals();
  return Braiding::flip(Q, n).scaled(-Scalar::one(Q));
}

static void BM_CyclotomicInverse(benchmark::State &state) {
  FieldSpec F(unsigned(state.range(0)));
  Scalar a = Scalar::one(F) + Scalar::zeta(F) + Scalar::zeta(F).pow(2);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CyclotomicInverse)->Arg(12)->Arg(36)->Arg(105);

static void BM_FrtCompletion(benchmark::State &state) {
  Braiding c = minus_flip(2);
  unsigned d = unsigned(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(frt_bialgebra(c, d));
}
BENCHMARK(BM_FrtCompletion)->Arg(4)->Arg(6)->Arg(8);

static void BM_Symmetrizer(benchmark::State &state) {
  Braiding c = minus_flip(2);
  int k = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symmetrizer(c, k));
}
BENCHMARK(BM_Symmetrizer)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

static void BM_NicholsScan(benchmark::State &state) {
  FieldSpec Q = FieldSpec::rationals();
  Braiding c = Braiding::flip(Q, int(state.range(0)));
  Scalar q = -Scalar::one(Q);
  for (auto _ : state) benchmark::DoNotOptimize(nichols_compute(c, q, 8));
}
BENCHMARK(BM_NicholsScan)->Arg(2)->Arg(3);

static void BM_NormalForm(benchmark::State &state) {
  FieldSpec Q = FieldSpec::rationals();
  PresentedBialgebra A = frt_bialgebra(minus_flip(2), 6);
  NcPoly p = NcPoly::one(Q);
  for (int i = 0; i < 3; ++i)
    p = p * (A.t(2, 2) + A.t(2, 1)) * (A.t(1, 2) + A.t(1, 1));
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(p, A.rewrite));
}
BENCHMARK(BM_NormalForm);

static void BM_ExteriorPipelineCore(benchmark::State &state) {
  FieldSpec Q = FieldSpec::rationals();
  Braiding tau = Braiding::flip(Q, 2);
  for (auto _ : state) {
    PresentedBialgebra A = frt_bialgebra(minus_flip(2), 6);
    NicholsData N = nichols_compute(tau, -Scalar::one(Q), 6);
    PairingData P = pairing_data(N);
    CorepData C = corep_matrices(A, N, P);
    LocalizedAlgebra L = localize(A, C.D, 6);
    AntipodeMap S = build_antipode(L, C);
    benchmark::DoNotOptimize(verify_hopf(L, S));
  }
}
BENCHMARK(BM_ExteriorPipelineCore);

BENCHMARK_MAIN();
