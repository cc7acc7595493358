#include <benchmark/benchmark.h>

#include "knotrep/dimension.hpp"
#include "knotrep/fox.hpp"
#include "knotrep/hom_search.hpp"
#include "knotrep/obstruction.hpp"
#include "knotrep/poly_text.hpp"
#include "knotrep/rep_variety.hpp"

using namespace knotrep;

namespace {

Diagram trefoil() { return parse_braid({1, 1, 1}, 2); }
Diagram figure8() { return parse_braid({1, -2, 1, -2}, 3); }

Presentation trefoil_two_gen() {
  return tietze_simplify(wirtinger(trefoil())).first;
}

}  // namespace

static void BM_parse_braid_trefoil(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trefoil());
}
BENCHMARK(BM_parse_braid_trefoil);

static void BM_wirtinger_tietze_fig8(benchmark::State& state) {
  const Diagram d = figure8();
  for (auto _ : state)
    benchmark::DoNotOptimize(tietze_simplify(wirtinger(d)).first);
}
BENCHMARK(BM_wirtinger_tietze_fig8);

static void BM_fox_colorings_fig8(benchmark::State& state) {
  const Diagram d = figure8();
  for (auto _ : state) benchmark::DoNotOptimize(fox_colorings(d, 5));
}
BENCHMARK(BM_fox_colorings_fig8);

static void BM_count_homs_trefoil_s4(benchmark::State& state) {
  const Presentation p = wirtinger(trefoil());
  const FiniteGroup s4 = symmetric_group(4);
  HomSearchOptions opt;
  opt.conjugacy_pruning = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(count_homs(p, s4, opt));
}
BENCHMARK(BM_count_homs_trefoil_s4)->Arg(0)->Arg(1);

static void BM_groebner_circle_line(benchmark::State& state) {
  for (auto _ : state) {
    const Ideal I = ideal_of({"x", "y"}, {"x^2 + y^2 - 1", "x - y"});
    benchmark::DoNotOptimize(groebner(I));
  }
}
BENCHMARK(BM_groebner_circle_line);

static void BM_krull_so3_group(benchmark::State& state) {
  for (auto _ : state) {
    const Ideal I = group_ideal(RepTarget::so(3));
    benchmark::DoNotOptimize(krull_dimension(I));
  }
}
BENCHMARK(BM_krull_so3_group);

static void BM_variety_dimension_trefoil_su2_fix1(benchmark::State& state) {
  const Presentation p = trefoil_two_gen();
  for (auto _ : state) {
    const RepVarietyModel m =
        build_rep_ideal(p, RepTarget::su2(), GaugeKind::FixFirstGenerator);
    benchmark::DoNotOptimize(variety_dimension(m));
  }
}
BENCHMARK(BM_variety_dimension_trefoil_su2_fix1);

static void BM_compare_unknot_trefoil(benchmark::State& state) {
  const Diagram a = parse_braid({}, 1), b = trefoil();
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare_knots(
        a, b, {{RepTarget::su2(), GaugeKind::FixFirstGenerator}}));
  }
}
BENCHMARK(BM_compare_unknot_trefoil);

BENCHMARK_MAIN();
