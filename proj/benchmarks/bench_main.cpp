#include <benchmark/benchmark.h>

#include <set>

#include "lpf/census.hpp"
#include "lpf/embedding.hpp"
#include "lpf/semantics.hpp"
#include "lpf/soundness.hpp"
#include "lpf/syntax.hpp"

namespace {

lpf::Signature bench_sig() {
  lpf::Signature sig;
  sig.add_fun("c", 0);
  sig.add_fun("f", 1);
  sig.add_pred("p", 0);
  sig.add_pred("q", 0);
  sig.add_pred("P", 1);
  return sig;
}

void BM_ParseFormula(benchmark::State& state) {
  lpf::Signature sig = bench_sig();
  const std::string text =
      "forall x. (P(x) /\\ ~P(f(x)) -> exists y. x = y \\/ P(y)) <-> p \\/ ~q";
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpf::parse_formula(text, sig));
  }
}
BENCHMARK(BM_ParseFormula);

void BM_EvalQuantified(benchmark::State& state) {
  lpf::Signature sig = bench_sig();
  lpf::FormulaPtr f =
      lpf::parse_formula("forall x. exists y. P(f(x)) /\\ x = y -> P(y)", sig);
  lpf::Structure s;
  s.domain = {"d1", "d2", "d3"};
  s.funs["c"] = lpf::FunTable{0, {0}};
  s.funs["f"] = lpf::FunTable{1, {1, 2, 0}};
  s.preds["p"] = lpf::PredTable{0, {lpf::Tv::B}};
  s.preds["q"] = lpf::PredTable{0, {lpf::Tv::F}};
  s.preds["P"] = lpf::PredTable{1, {lpf::Tv::T, lpf::Tv::B, lpf::Tv::F}};
  s.eq = lpf::identity_eq_table(3);
  lpf::Assignment a;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpf::eval_formula(*f, s, a));
  }
}
BENCHMARK(BM_EvalQuantified);

void BM_ParaconsistencySearch(benchmark::State& state) {
  lpf::Signature sig = bench_sig();
  std::vector<lpf::FormulaPtr> gamma = {lpf::parse_formula("p", sig),
                                        lpf::parse_formula("~p", sig)};
  lpf::FormulaPtr q = lpf::parse_formula("q", sig);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpf::check_consequence(gamma, q, {1, 100000}));
  }
}
BENCHMARK(BM_ParaconsistencySearch);

void BM_QuantifiedSearch(benchmark::State& state) {
  lpf::Signature sig = bench_sig();
  std::vector<lpf::FormulaPtr> gamma = {lpf::parse_formula("P(x)", sig)};
  lpf::FormulaPtr concl = lpf::parse_formula("forall x. P(x)", sig);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpf::check_consequence(gamma, concl, {3, 1'000'000}));
  }
}
BENCHMARK(BM_QuantifiedSearch);

void BM_CensusFull(benchmark::State& state) {
  std::set<int> laws;
  for (int i = 1; i <= 13; ++i) laws.insert(i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpf::count_candidates(laws));
  }
}
BENCHMARK(BM_CensusFull);

void BM_TranslateSequent(benchmark::State& state) {
  lpf::Signature sig = bench_sig();
  lpf::Sequent seq;
  seq.hyps = {lpf::parse_formula("forall x. P(x) -> P(f(x))", sig),
              lpf::parse_formula("P(c)", sig)};
  seq.concl = lpf::parse_formula("exists x. P(f(x))", sig);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpf::translate_sequent(seq));
  }
}
BENCHMARK(BM_TranslateSequent);

void BM_SoundnessSweepProp(benchmark::State& state) {
  lpf::SweepOptions opts;
  opts.quant_max_domain = 1;
  opts.eq_max_domain = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpf::rule_soundness_sweep(opts));
  }
}
BENCHMARK(BM_SoundnessSweepProp);

}  // namespace

BENCHMARK_MAIN();
