#include "adasat/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <future>
#include <ostream>
#include <random>
#include <sstream>

namespace adasat {

namespace {

std::string fmt_millis(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

BenchRecord run_instance(const std::string& name, const CnfInstance& cnf,
                         Strategy strategy,
                         std::optional<double> timeout_secs) {
  BenchRecord rec;
  rec.instance = name;
  rec.strategy = strategy;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (timeout_secs)
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(*timeout_secs));
  ConstraintStore cs;
  Encoding enc = encode_cnf(cnf, cs);
  SolveOutcome out = solve(cs, enc.problem_vars, strategy, deadline);
  rec.result = out.result;
  rec.steps = out.counters.unlabel_calls;
  rec.label_calls = out.counters.label_calls;
  rec.value_attempts = out.counters.value_attempts;
  rec.deleted_assignments = out.counters.deleted_assignments;
  rec.millis = out.millis;
  if (out.result == SolveResult::Sat) {
    rec.verified = check_model(cnf, out.model);
  } else if (out.result == SolveResult::Unsat) {
    rec.verified = dpll(cnf).verdict == Verdict::Unsat;
  }
  return rec;
}

std::vector<BenchRecord> run_bench_dir(const std::string& dir,
                                       const std::vector<Strategy>& strategies,
                                       std::optional<double> timeout_secs,
                                       int jobs, std::ostream* progress) {
  std::vector<std::string> paths;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".cnf")
      paths.push_back(e.path().string());
  }
  std::sort(paths.begin(), paths.end());
  struct Cell {
    std::string name;
    CnfInstance cnf;
    Strategy strategy;
  };
  std::vector<Cell> cells;
  for (const auto& p : paths) {
    CnfInstance cnf = parse_dimacs_file(p);
    std::string name = std::filesystem::path(p).filename().string();
    for (Strategy s : strategies) cells.push_back({name, cnf, s});
  }
  std::vector<BenchRecord> records(cells.size());
  if (jobs < 1) jobs = 1;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t k = next.fetch_add(1);
      if (k >= cells.size()) break;
      records[k] = run_instance(cells[k].name, cells[k].cnf, cells[k].strategy,
                                timeout_secs);
      if (progress) {
        std::ostringstream line;
        const BenchRecord& r = records[k];
        line << r.instance << "," << strategy_name(r.strategy) << ": "
             << result_name(r.result) << " steps=" << r.steps << " ("
             << fmt_millis(r.millis) << " ms)\n";
        *progress << line.str() << std::flush;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::future<void>> pool;
    for (int j = 0; j < jobs; ++j)
      pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "instance,strategy,result,steps,label_calls,value_attempts,"
         "deleted_assignments,millis,verified\n";
  auto row = [&](const BenchRecord& r) {
    out << r.instance << "," << strategy_label(r.strategy) << ","
        << result_name(r.result) << "," << r.steps << "," << r.label_calls
        << "," << r.value_attempts << "," << r.deleted_assignments << ","
        << fmt_millis(r.millis) << "," << (r.verified ? "true" : "false")
        << "\n";
  };
  for (const auto& r : records) row(r);
  // Per-strategy totals over completed runs, satisfiable and unsatisfiable
  // separately; timed-out cells contribute to neither.
  for (Strategy s : {Strategy::Cbt, Strategy::Cbj, Strategy::Dbt, Strategy::Fbt}) {
    for (SolveResult res : {SolveResult::Sat, SolveResult::Unsat}) {
      BenchRecord total;
      total.instance =
          res == SolveResult::Sat ? "TOTAL-sat" : "TOTAL-unsat";
      total.strategy = s;
      total.result = res;
      total.verified = true;
      bool any = false;
      for (const auto& r : records) {
        if (r.strategy != s || r.result != res) continue;
        any = true;
        total.steps += r.steps;
        total.label_calls += r.label_calls;
        total.value_attempts += r.value_attempts;
        total.deleted_assignments += r.deleted_assignments;
        total.millis += r.millis;
        total.verified = total.verified && r.verified;
      }
      if (any) row(total);
    }
  }
}

CnfInstance random_3cnf(uint64_t seed, int n_vars) {
  std::mt19937_64 rng(seed);
  CnfInstance cnf;
  cnf.n_vars = n_vars;
  std::uniform_int_distribution<int> m_dist(n_vars, 5 * n_vars);
  std::uniform_int_distribution<int> v_dist(1, n_vars);
  std::uniform_int_distribution<int> s_dist(0, 1);
  int m = m_dist(rng);
  for (int c = 0; c < m; ++c) {
    int a = v_dist(rng), b = a, d = a;
    while (b == a) b = v_dist(rng);
    while (d == a || d == b) d = v_dist(rng);
    std::vector<int> clause = {a, b, d};
    for (int& lit : clause)
      if (s_dist(rng)) lit = -lit;
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

VerifyReport run_verify(int trials, int n_vars, uint64_t seed) {
  VerifyReport rep;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    CnfInstance cnf = random_3cnf(seed + static_cast<uint64_t>(t), n_vars);
    auto complain = [&](const std::string& msg) {
      ++rep.failures;
      if (rep.messages.size() < 20) {
        rep.messages.push_back("trial " + std::to_string(t) + " (seed " +
                               std::to_string(seed + static_cast<uint64_t>(t)) +
                               "): " + msg);
      }
    };
    OracleResult ref = n_vars <= 20 ? brute_force(cnf) : dpll(cnf);
    OracleResult dp = dpll(cnf);
    if (dp.verdict != ref.verdict) {
      complain("reference deciders disagree");
      continue;
    }
    if (ref.verdict == Verdict::Sat && !check_model(cnf, ref.model))
      complain("brute force produced a bad model");
    if (dp.verdict == Verdict::Sat && !check_model(cnf, dp.model))
      complain("dpll produced a bad model");
    for (Strategy s :
         {Strategy::Cbt, Strategy::Cbj, Strategy::Dbt, Strategy::Fbt}) {
      BenchRecord rec = run_instance("random", cnf, s, std::nullopt);
      bool want_sat = ref.verdict == Verdict::Sat;
      if ((rec.result == SolveResult::Sat) != want_sat) {
        complain(std::string(strategy_name(s)) + " verdict disagrees");
        continue;
      }
      if (!rec.verified)
        complain(std::string(strategy_name(s)) + " failed verification");
    }
  }
  return rep;
}

}  // namespace adasat
