#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "adasat/bench.hpp"
#include "adasat/cnf.hpp"
#include "adasat/search.hpp"
#include "adasat/store.hpp"

using adasat::CnfInstance;
using adasat::ConstraintStore;
using adasat::Encoding;
using adasat::LabelSet;
using adasat::Strategy;
using adasat::Term;

// Propagation throughput: a unit chain of the given length collapses
// completely once the tail variable is set.
static void BM_UnitChainPropagation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ConstraintStore cs;
    std::vector<int32_t> xs, rs;
    for (int i = 0; i <= n; ++i) xs.push_back(cs.new_var());
    for (int i = 0; i < n; ++i) rs.push_back(cs.new_var());
    const LabelSet none;
    cs.add_or(Term::var(xs[0]), Term::var(xs[1]), Term::var(rs[0]), none);
    for (int i = 1; i < n; ++i)
      cs.add_or(Term::var(rs[static_cast<std::size_t>(i - 1)]),
                Term::var(xs[static_cast<std::size_t>(i + 1)]),
                Term::var(rs[static_cast<std::size_t>(i)]), none);
    for (int i = 0; i <= n; ++i)
      cs.equal(Term::var(xs[static_cast<std::size_t>(i)]), Term::constant(0),
               LabelSet{i + 1});
    benchmark::DoNotOptimize(cs.is_consistent());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_UnitChainPropagation)->Arg(64)->Arg(256)->Arg(1024);

// Cost of undoing the newest assignment: the common case for every
// backtracking strategy, deliberately a suffix of the source log.
static void BM_SuffixDelete(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CnfInstance cnf = adasat::random_3cnf(7, 30);
  for (auto _ : state) {
    state.PauseTiming();
    ConstraintStore cs;
    Encoding enc = adasat::encode_cnf(cnf, cs);
    int bound = 0;
    for (int32_t v : enc.problem_vars) {
      if (bound >= n) break;
      if (cs.bound_to_const(Term::var(v))) continue;
      cs.equal(Term::var(v), Term::constant(0), LabelSet{bound + 1});
      if (!cs.is_consistent()) cs.delete_labels(LabelSet{bound + 1});
      ++bound;
    }
    state.ResumeTiming();
    cs.delete_labels(LabelSet{bound});
    benchmark::DoNotOptimize(cs.is_consistent());
  }
}
BENCHMARK(BM_SuffixDelete)->Arg(5)->Arg(15)->Arg(25);

// Deep deletion with replay of the surviving tail: the backjumping case.
static void BM_DeepDelete(benchmark::State& state) {
  const int n = 25;
  CnfInstance cnf = adasat::random_3cnf(11, 30);
  for (auto _ : state) {
    state.PauseTiming();
    ConstraintStore cs;
    Encoding enc = adasat::encode_cnf(cnf, cs);
    int bound = 0;
    for (int32_t v : enc.problem_vars) {
      if (bound >= n) break;
      if (cs.bound_to_const(Term::var(v))) continue;
      cs.equal(Term::var(v), Term::constant(0), LabelSet{bound + 1});
      if (!cs.is_consistent()) cs.delete_labels(LabelSet{bound + 1});
      ++bound;
    }
    state.ResumeTiming();
    cs.delete_labels(LabelSet{1});  // earliest: everything after it replays
    benchmark::DoNotOptimize(cs.is_consistent());
  }
}
BENCHMARK(BM_DeepDelete);

// End-to-end solves on a small random instance, one timing per strategy.
static void BM_Solve(benchmark::State& state) {
  Strategy s = static_cast<Strategy>(state.range(0));
  CnfInstance cnf = adasat::random_3cnf(42, 14);
  for (auto _ : state) {
    ConstraintStore cs;
    Encoding enc = adasat::encode_cnf(cnf, cs);
    auto out = adasat::solve(cs, enc.problem_vars, s);
    benchmark::DoNotOptimize(out.counters.unlabel_calls);
  }
}
BENCHMARK(BM_Solve)
    ->Arg(static_cast<int>(Strategy::Cbt))
    ->Arg(static_cast<int>(Strategy::Cbj))
    ->Arg(static_cast<int>(Strategy::Dbt))
    ->Arg(static_cast<int>(Strategy::Fbt));

BENCHMARK_MAIN();
