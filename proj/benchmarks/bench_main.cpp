#include <benchmark/benchmark.h>

#include "ckm/classify.hpp"
#include "ckm/oracle.hpp"
#include "ckm/roots.hpp"

namespace {

using namespace ckm;

PsiSpec two_point_spec() {
  Ring rt({"t"});
  Ideal ideal(rt, {Polynomial::parse("t^2-1", rt)});
  QuotientAlgebra q = quotient_algebra(buchberger(ideal));
  PsiSpec::EntryMap entries;
  entries[{0, q.basis()[0]}] = Rational(5);
  entries[{0, q.basis()[1]}] = Rational(1);
  return PsiSpec(CartanData::validate({{2}}), ideal, entries);
}

void BM_buchberger_plane(benchmark::State& state) {
  Ring rxy({"x", "y"});
  Ideal ideal(rxy, {Polynomial::parse("x^3-2*x*y", rxy),
                    Polynomial::parse("x^2*y-2*y^2+x", rxy)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(ideal));
  }
}
BENCHMARK(BM_buchberger_plane);

void BM_radical_split(benchmark::State& state) {
  Ring rt({"t"});
  Ideal ideal(rt, {Polynomial::parse("t^6-2*t^5-t^4+4*t^3-t^2-2*t+1", rt)});
  ReducedGroebnerBasis gb = buchberger(ideal);
  for (auto _ : state) {
    ReducedGroebnerBasis rad = radical_zero_dim(gb);
    QuotientAlgebra q = quotient_algebra(rad);
    auto points = maximal_points(rad);
    benchmark::DoNotOptimize(crt_idempotents(q, points));
  }
}
BENCHMARK(BM_radical_split);

void BM_classify_two_points(benchmark::State& state) {
  PsiSpec spec = two_point_spec();
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_module(spec));
  }
}
BENCHMARK(BM_classify_two_points);

void BM_freudenthal_b2(benchmark::State& state) {
  CartanData b2 = CartanData::validate({{2, -2}, {-1, 2}});
  Weight lambda{{Rational(3), Rational(3)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(freudenthal_character(b2, lambda, 24));
  }
}
BENCHMARK(BM_freudenthal_b2);

void BM_peterson_affine(benchmark::State& state) {
  CartanData affine = CartanData::validate({{2, -2}, {-2, 2}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(roots_up_to_height(affine, 20));
  }
}
BENCHMARK(BM_peterson_affine);

void BM_gram_block(benchmark::State& state) {
  PsiSpec spec = two_point_spec();
  CurrentAlgebraSpec model(spec.cartan(), spec.quotient());
  for (auto _ : state) {
    benchmark::DoNotOptimize(shapovalov_gram(model, spec, {3}));
  }
}
BENCHMARK(BM_gram_block);

void BM_model_character(benchmark::State& state) {
  PsiSpec spec = two_point_spec();
  CurrentAlgebraSpec model(spec.cartan(), spec.quotient());
  for (auto _ : state) {
    benchmark::DoNotOptimize(irreducible_character(model, spec, 6));
  }
}
BENCHMARK(BM_model_character);

}  // namespace

BENCHMARK_MAIN();
