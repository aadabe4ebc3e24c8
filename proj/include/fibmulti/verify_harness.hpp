#pragma once

// Grid sweeps comparing the identity evaluators against their oracles, and
// timing comparisons between evaluation strategies.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "fibmulti/binomial_engine.hpp"
#include "fibmulti/core_sequences.hpp"
#include "fibmulti/identities.hpp"
#include "fibmulti/types.hpp"

namespace fibmulti {

// Declaration order is the order targets appear in reports.
enum class Target { theorem1, theorem2, theorem3, docagne, waring };

inline std::string_view to_string(Target t) {
  switch (t) {
    case Target::theorem1: return "theorem1";
    case Target::theorem2: return "theorem2";
    case Target::theorem3: return "theorem3";
    case Target::docagne: return "docagne";
    case Target::waring: return "waring";
  }
  return "unknown";
}

// Accepts the long names and the short forms t1, t2, t3.
inline Target parse_target(std::string_view name) {
  if (name == "theorem1" || name == "t1") return Target::theorem1;
  if (name == "theorem2" || name == "t2") return Target::theorem2;
  if (name == "theorem3" || name == "t3") return Target::theorem3;
  if (name == "docagne") return Target::docagne;
  if (name == "waring") return Target::waring;
  throw Error(ErrorKind::ConfigError, "unknown target '" + std::string(name) + "'");
}

struct IndexRange {
  SeqIndex lo = 1;
  SeqIndex hi = 1;
};

struct SweepConfig {
  IndexRange n_range;  // also the a range for docagne
  IndexRange m_range;  // also the b range for docagne
  std::vector<GeneralizedSeed> seeds = default_seeds();
  std::vector<Target> targets;
  bool fail_fast = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct TargetCounts {
  Target target = Target::theorem1;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct CaseInput {
  std::string name;
  std::string value;  // decimal

  friend bool operator==(const CaseInput&, const CaseInput&) = default;
};

struct Counterexample {
  Target target = Target::theorem1;
  std::vector<CaseInput> inputs;
  SeqValue expected;
  SeqValue actual;
};

struct VerificationReport {
  std::vector<TargetCounts> targets;
  std::optional<Counterexample> first_counterexample;
  double wall_time_ms = 0.0;

  std::uint64_t checked() const {
    std::uint64_t c = 0;
    for (const auto& t : targets) c += t.checked;
    return c;
  }
  std::uint64_t passed() const {
    std::uint64_t c = 0;
    for (const auto& t : targets) c += t.passed;
    return c;
  }
  std::uint64_t failed() const {
    std::uint64_t c = 0;
    for (const auto& t : targets) c += t.failed;
    return c;
  }
  const TargetCounts* find(Target target) const {
    for (const auto& t : targets)
      if (t.target == target) return &t;
    return nullptr;
  }
};

inline void validate(const SweepConfig& config) {
  auto check_range = [](const IndexRange& r, const char* name) {
    if (r.lo > r.hi) throw Error(ErrorKind::ConfigError, std::string(name) + " range is empty");
  };
  check_range(config.n_range, "n");
  check_range(config.m_range, "m");
  if (config.targets.empty()) throw Error(ErrorKind::ConfigError, "no targets selected");
  for (Target t : config.targets) {
    if (t == Target::docagne) continue;
    if (config.n_range.lo < 1 || config.m_range.lo < 1)
      throw Error(ErrorKind::ConfigError,
                  std::string(to_string(t)) + " requires range lower bounds >= 1");
    SeqIndex product = 0;
    if (__builtin_mul_overflow(config.n_range.hi, config.m_range.hi, &product))
      throw Error(ErrorKind::ConfigError, "n*m overflows the index type");
    if (t == Target::theorem3 && config.seeds.empty())
      throw Error(ErrorKind::ConfigError, "theorem3 requires at least one seed");
  }
}

// The evaluators under test. Tests substitute faulty versions to exercise
// failure reporting; everything else uses the defaults.
struct IdentitySet {
  SeqValue (*fib_multiple)(const MultipleIndexQuery&) = &fibmulti::fib_multiple;
  SeqValue (*lucas_multiple)(const MultipleIndexQuery&) = &fibmulti::lucas_multiple;
  SeqValue (*gen_multiple)(const GeneralizedSeed&, const MultipleIndexQuery&) = &fibmulti::gen_multiple;
  SeqValue (*docagne_residual)(const DocagnePair&) = &fibmulti::docagne_residual;
};

namespace detail {

// (target, first index, second index, seed index); smallest failing key wins.
using CaseKey = std::tuple<int, SeqIndex, SeqIndex, std::size_t>;

struct RowResult {
  TargetCounts counts;
  std::optional<CaseKey> worst_key;
  std::optional<Counterexample> counterexample;
};

inline std::vector<CaseInput> nm_inputs(SeqIndex n, SeqIndex m) {
  return {{"n", std::to_string(n)}, {"m", std::to_string(m)}};
}

// Evaluates one grid row (fixed first index) for one target.
inline RowResult run_row(const SweepConfig& config, const IdentitySet& id, Target target, SeqIndex n,
                         bool stop_on_failure) {
  RowResult out;
  out.counts.target = target;

  auto record = [&](const CaseKey& key, std::vector<CaseInput> inputs, const SeqValue& expected,
                    const SeqValue& actual) {
    ++out.counts.checked;
    if (expected == actual) {
      ++out.counts.passed;
      return true;
    }
    ++out.counts.failed;
    if (!out.worst_key || key < *out.worst_key) {
      out.worst_key = key;
      out.counterexample = Counterexample{target, std::move(inputs), expected, actual};
    }
    return false;
  };

  const int tid = static_cast<int>(target);
  for (SeqIndex m = config.m_range.lo; m <= config.m_range.hi; ++m) {
    bool ok = true;
    switch (target) {
      case Target::theorem1: {
        const MultipleIndexQuery q{n, m};
        ok = record({tid, n, m, 0}, nm_inputs(n, m), fib_fast_doubling(checked_product(n, m)), id.fib_multiple(q));
        break;
      }
      case Target::theorem2: {
        const MultipleIndexQuery q{n, m};
        ok = record({tid, n, m, 0}, nm_inputs(n, m), lucas(checked_product(n, m)), id.lucas_multiple(q));
        break;
      }
      case Target::theorem3: {
        const MultipleIndexQuery q{n, m};
        const SeqIndex nm = checked_product(n, m);
        for (std::size_t s = 0; s < config.seeds.size() && ok; ++s) {
          const auto& seed = config.seeds[s];
          auto inputs = nm_inputs(n, m);
          inputs.push_back({"g0", to_decimal(seed.g0)});
          inputs.push_back({"g1", to_decimal(seed.g1)});
          ok = record({tid, n, m, s}, std::move(inputs), gen_fib(seed, nm), id.gen_multiple(seed, q));
          if (!stop_on_failure) ok = true;
        }
        break;
      }
      case Target::docagne: {
        ok = record({tid, n, m, 0}, {{"a", std::to_string(n)}, {"b", std::to_string(m)}}, SeqValue(0),
                    id.docagne_residual({n, m}));
        break;
      }
      case Target::waring: {
        // Unfolded Waring form with P = (-1)^n against the sign-folded evaluators.
        const MultipleIndexQuery q{n, m};
        const WaringArguments args{lucas(n), SeqValue(n % 2 == 0 ? 1 : -1), m};
        const SeqValue diff_form = fib(n) * waring_diff_poly(args);
        const SeqValue folded_fib = id.fib_multiple(q);
        if (diff_form != folded_fib) {
          ok = record({tid, n, m, 0}, nm_inputs(n, m), diff_form, folded_fib);
        } else {
          ok = record({tid, n, m, 0}, nm_inputs(n, m), waring_sum_poly(args), id.lucas_multiple(q));
        }
        break;
      }
    }
    if (!ok && stop_on_failure) break;
  }
  return out;
}

inline void merge(VerificationReport& report, std::optional<CaseKey>& best, RowResult&& row) {
  auto it = std::find_if(report.targets.begin(), report.targets.end(),
                         [&](const TargetCounts& t) { return t.target == row.counts.target; });
  it->checked += row.counts.checked;
  it->passed += row.counts.passed;
  it->failed += row.counts.failed;
  if (row.worst_key && (!best || *row.worst_key < *best)) {
    best = row.worst_key;
    report.first_counterexample = std::move(row.counterexample);
  }
}

}  // namespace detail

/// Runs every selected target over the configured grid. Rows are evaluated in
/// parallel unless fail_fast is set; the result does not depend on scheduling
/// (the reported counterexample is the smallest failing grid point).
inline VerificationReport sweep_verify(const SweepConfig& config, const IdentitySet& identities = {}) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();

  std::vector<Target> targets = config.targets;
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  VerificationReport report;
  for (Target t : targets) report.targets.push_back({t, 0, 0, 0});

  std::vector<std::pair<Target, SeqIndex>> jobs;
  for (Target t : targets)
    for (SeqIndex n = config.n_range.lo; n <= config.n_range.hi; ++n) jobs.emplace_back(t, n);

  std::optional<detail::CaseKey> best;
  if (config.fail_fast) {
    for (const auto& [t, n] : jobs) {
      auto row = detail::run_row(config, identities, t, n, true);
      const bool failed = row.counts.failed > 0;
      detail::merge(report, best, std::move(row));
      if (failed) break;
    }
  } else {
    unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, jobs.size()));
    std::vector<detail::RowResult> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t j = next++; j < jobs.size(); j = next++)
        results[j] = detail::run_row(config, identities, jobs[j].first, jobs[j].second, false);
    };
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    for (auto& row : results) detail::merge(report, best, std::move(row));
  }

  report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

enum class BenchStrategy { binomial_sum, fast_doubling, iterative };

inline std::string_view to_string(BenchStrategy s) {
  switch (s) {
    case BenchStrategy::binomial_sum: return "binomial_sum";
    case BenchStrategy::fast_doubling: return "fast_doubling";
    case BenchStrategy::iterative: return "iterative";
  }
  return "unknown";
}

struct BenchRecord {
  BenchStrategy strategy = BenchStrategy::binomial_sum;
  SeqIndex n = 1;
  SeqIndex m = 1;
  std::size_t result_digits = 0;
  std::int64_t wall_time_ns = 0;  // median over repetitions
};

inline SeqValue run_strategy(BenchStrategy s, SeqIndex n, SeqIndex m) {
  switch (s) {
    case BenchStrategy::binomial_sum: return fib_multiple({n, m});
    case BenchStrategy::fast_doubling: return fib_fast_doubling(checked_product(n, m));
    case BenchStrategy::iterative: return fib(checked_product(n, m));
  }
  return 0;
}

/// Times the three ways of producing F_{nm}. Values are compared once before
/// any timing; that run doubles as the warm-up and is not part of the median.
inline std::vector<BenchRecord> bench_compare(SeqIndex n, SeqIndex m, std::int64_t repetitions) {
  if (n < 1 || m < 1) throw Error(ErrorKind::DomainError, "bench requires n >= 1 and m >= 1");
  if (repetitions < 1) throw Error(ErrorKind::DomainError, "bench requires repetitions >= 1");
  checked_product(n, m);

  constexpr BenchStrategy kStrategies[] = {BenchStrategy::binomial_sum, BenchStrategy::fast_doubling,
                                           BenchStrategy::iterative};
  std::vector<SeqValue> values;
  for (auto s : kStrategies) values.push_back(run_strategy(s, n, m));
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] != values[0])
      throw Error(ErrorKind::ValueMismatch, std::string(to_string(kStrategies[i])) + " disagrees with " +
                                                std::string(to_string(kStrategies[0])) + " at n=" +
                                                std::to_string(n) + ", m=" + std::to_string(m));
  }
  const std::size_t digits = decimal_digits(values[0]);

  std::vector<BenchRecord> records;
  for (auto s : kStrategies) {
    std::vector<std::int64_t> samples;
    samples.reserve(static_cast<std::size_t>(repetitions));
    for (std::int64_t r = 0; r < repetitions; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      SeqValue v = run_strategy(s, n, m);
      const auto t1 = std::chrono::steady_clock::now();
      if (v != values[0]) throw Error(ErrorKind::ValueMismatch, "strategy result changed between runs");
      samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    const std::int64_t median = samples.size() % 2 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
    records.push_back({s, n, m, digits, median});
  }
  return records;
}

}  // namespace fibmulti
