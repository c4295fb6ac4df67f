#include <benchmark/benchmark.h>

#include "cnum/eval.hpp"
#include "cnum/laws.hpp"
#include "cnum/lexer.hpp"
#include "cnum/rng.hpp"

namespace {

using cnum::Complex;
using cnum::CompleteNumber;
using cnum::Rational;
using cnum::SplitMix64;

void BM_RationalAdd(benchmark::State& state) {
    const Rational a(355, 113);
    const Rational b(-106, 333);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a + b);
    }
}
BENCHMARK(BM_RationalAdd);

void BM_ComplexMul(benchmark::State& state) {
    const Complex a(Rational(3, 7), Rational(5, 11));
    const Complex b(Rational(4, 9), Rational(7, 13));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_ComplexMul);

void BM_ComplexDiv(benchmark::State& state) {
    const Complex a(25, 25);
    const Complex b(4, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a / b);
    }
}
BENCHMARK(BM_ComplexDiv);

void BM_CompleteMul(benchmark::State& state) {
    SplitMix64 rng(1);
    const CompleteNumber p = cnum::gen_complete(rng, 10);
    const CompleteNumber q = cnum::gen_complete(rng, 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p * q);
    }
}
BENCHMARK(BM_CompleteMul);

void BM_CompleteDiv(benchmark::State& state) {
    SplitMix64 rng(2);
    CompleteNumber p = cnum::gen_complete(rng, 10);
    CompleteNumber q = cnum::gen_complete(rng, 10);
    while (shadow(q).is_zero()) q = cnum::gen_complete(rng, 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p / q);
    }
}
BENCHMARK(BM_CompleteDiv);

void BM_GenComplete(benchmark::State& state) {
    SplitMix64 rng(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cnum::gen_complete(rng, 10));
    }
}
BENCHMARK(BM_GenComplete);

void BM_Tokenize(benchmark::State& state) {
    const std::string text = "(up(2+3i)+down(5-7i))*up(1)/up(4+3i)";
    for (auto _ : state) {
        benchmark::DoNotOptimize(cnum::tokenize(text));
    }
}
BENCHMARK(BM_Tokenize);

void BM_EvalText(benchmark::State& state) {
    const std::string text = "(up(2+3i)+down(5-7i))*up(1)/up(4+3i)";
    for (auto _ : state) {
        benchmark::DoNotOptimize(cnum::eval_text(text));
    }
}
BENCHMARK(BM_EvalText);

void BM_LawAddCommTrials(benchmark::State& state) {
    cnum::TrialConfig config;
    config.trials = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cnum::check_law("add_comm", config));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LawAddCommTrials)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
