#include <benchmark/benchmark.h>

#include "holo/automorphisms.hpp"
#include "holo/fpf_count.hpp"
#include "holo/holomorph.hpp"
#include "holo/homomorphism.hpp"
#include "holo/named_groups.hpp"
#include "holo/perm_group.hpp"

using namespace holo;

namespace {

void bm_make_named_group(benchmark::State& state) {
  for (auto _ : state) {
    FiniteGroup g = make_named_group("S5");
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(bm_make_named_group);

void bm_close_generators_s5(benchmark::State& state) {
  FiniteGroup g = make_named_group("S5");
  PermGroup reg = regular_representation(g);
  std::vector<Perm> gens = reg.generators();
  for (auto _ : state) {
    PermGroup closed = close_generators(gens, reg.degree());
    benchmark::DoNotOptimize(closed.order());
  }
}
BENCHMARK(bm_close_generators_s5);

void bm_conjugacy_classes(benchmark::State& state) {
  FiniteGroup g = make_named_group("S5");
  PermGroup reg = regular_representation(g);
  for (auto _ : state) {
    auto classes = conjugacy_classes(reg);
    benchmark::DoNotOptimize(classes.size());
  }
}
BENCHMARK(bm_conjugacy_classes);

void bm_automorphism_group_a5(benchmark::State& state) {
  GroupRef g = make_ref(make_named_group("A5"));
  for (auto _ : state) {
    AutGroupRecord aut = automorphism_group(g);
    benchmark::DoNotOptimize(aut.size());
  }
}
BENCHMARK(bm_automorphism_group_a5);

void bm_hom_enumeration_s4(benchmark::State& state) {
  GroupRef s4 = make_ref(make_named_group("S4"));
  for (auto _ : state) {
    auto homs = enumerate_homomorphisms(s4, s4);
    benchmark::DoNotOptimize(homs.size());
  }
}
BENCHMARK(bm_hom_enumeration_s4);

void bm_build_holomorph_s4(benchmark::State& state) {
  GroupRef s4 = make_ref(make_named_group("S4"));
  for (auto _ : state) {
    HolomorphContext ctx = build_holomorph(s4);
    benchmark::DoNotOptimize(ctx.hol.order());
  }
}
BENCHMARK(bm_build_holomorph_s4);

void bm_enumerate_h2_s4(benchmark::State& state) {
  GroupRef s4 = make_ref(make_named_group("S4"));
  HolomorphContext ctx = build_holomorph(s4);
  for (auto _ : state) {
    auto h2 = enumerate_H2(ctx);
    benchmark::DoNotOptimize(h2.size());
  }
}
BENCHMARK(bm_enumerate_h2_s4);

void bm_enumerate_h1_s4(benchmark::State& state) {
  GroupRef s4 = make_ref(make_named_group("S4"));
  HolomorphContext ctx = build_holomorph(s4);
  for (auto _ : state) {
    auto h1 = enumerate_H1(ctx);
    benchmark::DoNotOptimize(h1.size());
  }
}
BENCHMARK(bm_enumerate_h1_s4);

void bm_end_fpf_brute_s4(benchmark::State& state) {
  GroupRef s4 = make_ref(make_named_group("S4"));
  for (auto _ : state) {
    FpfCountReport rep = end_fpf_bruteforce(s4);
    benchmark::DoNotOptimize(rep.total);
  }
}
BENCHMARK(bm_end_fpf_brute_s4);

void bm_involution_formula(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(alternating_involutions_formula(30));
  }
}
BENCHMARK(bm_involution_formula);

}  // namespace

BENCHMARK_MAIN();
