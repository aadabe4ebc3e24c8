#pragma once

// Command-line front end. Kept in a header so the test suite can drive it
// in-process; tools/fibmulti.cpp is a thin main() around run_cli().
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
// Nothing is written to `out` unless the command succeeds or the failure is
// a verification failure with a report to show.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibmulti/core_sequences.hpp"
#include "fibmulti/identities.hpp"
#include "fibmulti/report.hpp"
#include "fibmulti/verify_harness.hpp"

namespace fibmulti::cli {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// One `g0,g1` pair per line. Blank lines are skipped.
inline std::vector<GeneralizedSeed> parse_seeds(std::istream& in) {
  std::vector<GeneralizedSeed> seeds;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw Error(ErrorKind::ParseError, "seeds line " + std::to_string(line_no) + ": expected g0,g1");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    seeds.push_back({parse_seq_value(trim(line.substr(0, comma))), parse_seq_value(trim(line.substr(comma + 1)))});
  }
  if (seeds.empty()) throw Error(ErrorKind::ParseError, "seeds file contains no pairs");
  return seeds;
}

namespace detail {

inline std::string render_value(std::string_view quantity, const std::vector<CaseInput>& inputs,
                                std::string_view via, const SeqValue& value, Format format) {
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json doc;
      doc["quantity"] = std::string(quantity);
      for (const auto& in : inputs) doc[in.name] = in.value;
      doc["via"] = std::string(via);
      doc["value"] = to_decimal(value);
      return doc.dump(2) + "\n";
    }
    case Format::csv: {
      std::string header = "quantity", row = std::string(quantity);
      for (const auto& in : inputs) {
        header += "," + in.name;
        row += "," + in.value;
      }
      return header + ",via,value\n" + row + "," + std::string(via) + "," + to_decimal(value) + "\n";
    }
    case Format::text:
      break;
  }
  return to_decimal(value) + "\n";
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multiple-index Fibonacci, Lucas and generalized Fibonacci terms"};
  app.name("fibmulti");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::string out_path;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_path, "Write the result document to PATH instead of stdout");

  // compute
  auto* compute = app.add_subcommand("compute", "Compute a single sequence term");
  compute->require_subcommand(1);
  SeqIndex n = 0, m = 0, k = 0;
  std::string g0_text = "0", g1_text = "1";
  std::string via;
  const auto via_check = CLI::IsMember({"identity", "oracle"});

  auto* fib_nm = compute->add_subcommand("fib-nm", "F_{n*m} from F_n and powers of L_n");
  auto* lucas_nm = compute->add_subcommand("lucas-nm", "L_{n*m} from powers of L_n");
  auto* gen_nm = compute->add_subcommand("gen-nm", "G_{n*m} for seed (G0, G1)");
  for (auto* sub : {fib_nm, lucas_nm, gen_nm}) {
    sub->add_option("--n", n, "Inner index n >= 1")->required();
    sub->add_option("--m", m, "Multiplier m >= 1")->required();
    sub->add_option("--via", via, "Evaluation path (default identity)")->check(via_check);
  }
  gen_nm->add_option("--g0", g0_text, "G_0 (decimal integer)")->required()->allow_extra_args(false);
  gen_nm->add_option("--g1", g1_text, "G_1 (decimal integer)")->required()->allow_extra_args(false);

  auto* fib_k = compute->add_subcommand("fib", "F_k for any integer k");
  auto* lucas_k = compute->add_subcommand("lucas", "L_k for any integer k");
  for (auto* sub : {fib_k, lucas_k}) {
    sub->add_option("--k", k, "Index k")->required();
    sub->add_option("--via", via, "oracle: recurrence (default); identity: fast doubling")->check(via_check);
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Sweep identities against their oracles");
  std::vector<std::string> target_names;
  SeqIndex n_min = 1, m_min = 1, n_max = 0, m_max = 0;
  std::string seeds_path;
  bool fail_fast = false;
  unsigned threads = 0;
  verify->add_option("--targets", target_names, "t1,t2,t3,docagne,waring")->required()->delimiter(',');
  verify->add_option("--n-max", n_max, "Upper bound of n (or a for docagne)")->required();
  verify->add_option("--m-max", m_max, "Upper bound of m (or b for docagne)")->required();
  verify->add_option("--n-min", n_min, "Lower bound of n (default 1)");
  verify->add_option("--m-min", m_min, "Lower bound of m (default 1)");
  verify->add_option("--seeds", seeds_path, "File with one g0,g1 pair per line");
  verify->add_flag("--fail-fast", fail_fast, "Stop at the first failing case");
  verify->add_option("--threads", threads, "Worker threads (0: all cores)");

  // bench
  auto* bench = app.add_subcommand("bench", "Time binomial sum vs fast doubling vs recurrence for F_{n*m}");
  std::int64_t reps = 5;
  bench->add_option("--n", n, "n >= 1")->required();
  bench->add_option("--m", m, "m >= 1")->required();
  bench->add_option("--reps", reps, "Timed repetitions per strategy");

  // table
  auto* table = app.add_subcommand("table", "Print the summands of an identity");
  int theorem = 1;
  table->add_option("--theorem", theorem, "1: F_{nm}, 2: L_{nm}, 3: G_{nm}")->required()->check(CLI::Range(1, 3));
  table->add_option("--n", n, "n >= 1")->required();
  table->add_option("--m", m, "m >= 1")->required();
  auto* table_g0 = table->add_option("--g0", g0_text, "G_0 for theorem 3 (default 0)");
  auto* table_g1 = table->add_option("--g1", g1_text, "G_1 for theorem 3 (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  std::string document;
  int status = kExitOk;
  try {
    const Format format = parse_format(format_name);

    if (compute->parsed()) {
      if (fib_k->parsed() || lucas_k->parsed()) {
        const bool fast = (via == "identity");
        const bool is_fib = fib_k->parsed();
        SeqValue v = is_fib ? (fast ? fib_fast_doubling(k) : fib(k)) : (fast ? lucas_fast_doubling(k) : lucas(k));
        document = detail::render_value(is_fib ? "fib" : "lucas", {{"k", std::to_string(k)}},
                                        via.empty() ? "oracle" : via, v, format);
      } else {
        const MultipleIndexQuery q{n, m};
        validate(q);
        const SeqIndex nm = checked_product(n, m);
        const bool oracle = (via == "oracle");
        std::vector<CaseInput> inputs{{"n", std::to_string(n)}, {"m", std::to_string(m)}};
        SeqValue v;
        std::string_view quantity;
        if (fib_nm->parsed()) {
          quantity = "fib-nm";
          v = oracle ? fib_fast_doubling(nm) : fib_multiple(q);
        } else if (lucas_nm->parsed()) {
          quantity = "lucas-nm";
          v = oracle ? lucas(nm) : lucas_multiple(q);
        } else {
          quantity = "gen-nm";
          const GeneralizedSeed seed{parse_seq_value(g0_text), parse_seq_value(g1_text)};
          inputs.push_back({"g0", to_decimal(seed.g0)});
          inputs.push_back({"g1", to_decimal(seed.g1)});
          v = oracle ? gen_fib(seed, nm) : gen_multiple(seed, q);
        }
        document = detail::render_value(quantity, inputs, oracle ? "oracle" : "identity", v, format);
      }
    } else if (verify->parsed()) {
      SweepConfig config;
      config.n_range = {n_min, n_max};
      config.m_range = {m_min, m_max};
      config.fail_fast = fail_fast;
      config.threads = threads;
      for (const auto& name : target_names) config.targets.push_back(parse_target(name));
      if (!seeds_path.empty()) {
        std::ifstream in(seeds_path);
        if (!in) throw Error(ErrorKind::ConfigError, "cannot open seeds file '" + seeds_path + "'");
        config.seeds = parse_seeds(in);
      }
      const auto report = sweep_verify(config);
      document = report_render(report, format);
      if (report.failed() > 0) status = kExitVerifyFailed;
    } else if (bench->parsed()) {
      document = report_render(bench_compare(n, m, reps), format);
    } else if (table->parsed()) {
      const auto which = static_cast<Theorem>(theorem);
      if (which != Theorem::generalized && (table_g0->count() > 0 || table_g1->count() > 0))
        throw Error(ErrorKind::ConfigError, "--g0/--g1 only apply to --theorem 3");
      GeneralizedSeed seed{parse_seq_value(g0_text), parse_seq_value(g1_text)};
      document = report_render(theorem_table(which, {n, m}, seed), format);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ValueMismatch ? kExitVerifyFailed : kExitUsage;
  }

  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
    file << document;
  } else {
    out << document;
  }
  return status;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"fibmulti"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fibmulti::cli
