// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot paths: Cayley-ball construction, the
// p-harmonic coordinate solver, Folner verification, profile evaluation,
// and the tree certificate.

#include <benchmark/benchmark.h>

#include "lpcoh/cocycle.hpp"
#include "lpcoh/dirichlet.hpp"
#include "lpcoh/folner.hpp"
#include "lpcoh/graph.hpp"
#include "lpcoh/group.hpp"
#include "lpcoh/hyperbolic.hpp"

using namespace lpcoh;

namespace {

void BM_CayleyBallZ2(benchmark::State& state) {
  const Group g = Group::zd(2);
  const int radius = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_cayley_ball(g, radius));
  }
  state.SetComplexityN(radius);
}
BENCHMARK(BM_CayleyBallZ2)->Arg(16)->Arg(32)->Arg(64)->Complexity();

void BM_CayleyBallLamplighter(benchmark::State& state) {
  const Group g = Group::lamplighter();
  const int radius = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_cayley_ball(g, radius));
  }
}
BENCHMARK(BM_CayleyBallLamplighter)->Arg(8)->Arg(12)->Arg(16);

void BM_PHarmonicSolve(benchmark::State& state) {
  const double p = static_cast<double>(state.range(0));
  const CayleyBall ball = build_cayley_ball(Group::zd(2), 12);
  BoundaryValues boundary;
  for (std::int32_t v = 0; v < ball.graph.num_vertices(); ++v) {
    if (!ball.graph.is_interior(v)) {
      boundary.emplace_back(v, static_cast<double>(ball.labels[v][0]));
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_p_harmonic(ball.graph, boundary, p, 1e-8, 100000));
  }
}
BENCHMARK(BM_PHarmonicSolve)->Arg(2)->Arg(3)->Arg(4);

void BM_FolnerVerifyLamplighter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FolnerSequence F = folner_lamplighter(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_controlled(F, 6.0));
  }
}
BENCHMARK(BM_FolnerVerifyLamplighter)->Arg(8)->Arg(12);

void BM_SublinearityProfile(benchmark::State& state) {
  const Group z = Group::zd(1);
  const CocycleHandle b =
      CocycleHandle::radial_coboundary(z, RadialFunction{0.5, true}, 4.0, 10000);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sublinearity_profile(b, N, 4.0, N / 4));
  }
}
BENCHMARK(BM_SublinearityProfile)->Arg(32)->Arg(128);

void BM_TreeCertificate(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonvanishing_certificate(build_tree_ball(depth), 4.0));
  }
}
BENCHMARK(BM_TreeCertificate)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
