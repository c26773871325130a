#include <benchmark/benchmark.h>

#include <random>

#include "cosetalg/catalog.hpp"
#include "cosetalg/kernels.hpp"
#include "cosetalg/transfer.hpp"

using namespace cosetalg;

namespace {

struct Setup {
  GroupPtr group;
  Subgroup subgroup;
};

GroupPtr symmetric5() {
  static const GroupPtr g = group_from_permutations(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, "S5");
  return g;
}

// 0: S4 / S3, 1: S5 / <(01)>, 2: S5 / S4 (stabilizer of the point 4).
Setup setup(int which) {
  if (which == 0) {
    auto p = *find_catalog_pair("S4", "S3");
    return {p.group, p.subgroup};
  }
  auto g = symmetric5();
  std::vector<GroupElement> seed;
  if (which == 1) {
    seed.push_back(*g->find({1, 0, 2, 3, 4}));
    return {g, subgroup_closure(g, seed, "<(01)>")};
  }
  seed.push_back(*g->find({1, 0, 2, 3, 4}));
  seed.push_back(*g->find({1, 2, 3, 0, 4}));
  return {g, subgroup_closure(g, seed, "S4")};
}

template <Scalar S>
S random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  Rational re(num(rng), den(rng)), im(num(rng), den(rng));
  re.canonicalize();
  im.canonicalize();
  return ScalarTraits<S>::make(re, im);
}

template <class T, Scalar S = typename T::value_type>
T random_on(std::mt19937& rng, Space space) {
  std::vector<S> v;
  for (std::size_t i = 0; i < space.size; ++i) v.push_back(random_scalar<S>(rng));
  return T(space, std::move(v));
}

template <Scalar S, bool kParallel>
void BM_GroupMeasureConvolution(benchmark::State& state) {
  auto s = setup(static_cast<int>(state.range(0)));
  std::mt19937 rng(1);
  auto a = random_on<Measure<S>, S>(rng, group_space(*s.group));
  auto b = random_on<Measure<S>, S>(rng, group_space(*s.group));
  for (auto _ : state) {
    auto out = kParallel ? kernels::group_measure_convolution(*s.group, a, b)
                         : reference::group_measure_convolution(*s.group, a, b);
    benchmark::DoNotOptimize(out);
  }
  state.SetLabel(s.group->label() + " / " + s.subgroup.label());
}

template <Scalar S, bool kParallel>
void BM_CosetMeasureConvolution(benchmark::State& state) {
  auto s = setup(static_cast<int>(state.range(0)));
  TransferContext ctx(s.group, s.subgroup);
  std::mt19937 rng(2);
  auto a = random_on<Measure<S>, S>(rng, ctx.coset_space());
  auto b = random_on<Measure<S>, S>(rng, ctx.coset_space());
  auto h = ctx.subgroup().members();
  for (auto _ : state) {
    auto out = kParallel ? kernels::coset_measure_convolution(ctx.cosets(), h, a, b)
                         : reference::coset_measure_convolution(ctx.cosets(), h, a, b);
    benchmark::DoNotOptimize(out);
  }
  state.SetLabel(s.group->label() + " / " + s.subgroup.label());
}

template <Scalar S, bool kParallel>
void BM_CosetMeasureInvolution(benchmark::State& state) {
  auto s = setup(static_cast<int>(state.range(0)));
  TransferContext ctx(s.group, s.subgroup);
  std::mt19937 rng(3);
  auto a = random_on<Measure<S>, S>(rng, ctx.coset_space());
  for (auto _ : state) {
    auto out = kParallel ? kernels::coset_measure_involution(ctx.cosets(), a, true)
                         : reference::coset_measure_involution(ctx.cosets(), a, true);
    benchmark::DoNotOptimize(out);
  }
  state.SetLabel(s.group->label() + " / " + s.subgroup.label());
}

template <Scalar S, bool kParallel>
void BM_CosetFunctionConvolution(benchmark::State& state) {
  auto s = setup(static_cast<int>(state.range(0)));
  TransferContext ctx(s.group, s.subgroup);
  std::mt19937 rng(4);
  auto phi = random_on<Function<S>, S>(rng, ctx.coset_space());
  auto psi = j_function(ctx, random_on<Function<S>, S>(rng, ctx.coset_space()));
  S weight = ScalarTraits<S>::make(ctx.haar().coset_weight());
  for (auto _ : state) {
    auto out = kParallel ? kernels::coset_function_convolution(ctx.cosets(), phi, psi, weight)
                         : reference::coset_function_convolution(ctx.cosets(), phi, psi, weight);
    benchmark::DoNotOptimize(out);
  }
  state.SetLabel(s.group->label() + " / " + s.subgroup.label());
}

}  // namespace

#define COSET_BENCH(fn)                                                                    \
  BENCHMARK(fn<ExactComplex, true>)->Name(#fn "/exact/openmp")->DenseRange(0, 2);          \
  BENCHMARK(fn<ExactComplex, false>)->Name(#fn "/exact/serial")->DenseRange(0, 2);         \
  BENCHMARK(fn<FloatComplex, true>)->Name(#fn "/float/openmp")->DenseRange(0, 2);          \
  BENCHMARK(fn<FloatComplex, false>)->Name(#fn "/float/serial")->DenseRange(0, 2)

COSET_BENCH(BM_GroupMeasureConvolution);
COSET_BENCH(BM_CosetMeasureConvolution);
COSET_BENCH(BM_CosetMeasureInvolution);
COSET_BENCH(BM_CosetFunctionConvolution);

BENCHMARK_MAIN();
