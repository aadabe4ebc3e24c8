#pragma once

// Serialization of sweep reports, benchmark records and identity tables as
// JSON, CSV or plain text. Big integers are always decimal strings.

#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fibmulti/identities.hpp"
#include "fibmulti/verify_harness.hpp"

namespace fibmulti {

enum class Format { text, json, csv };

inline Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw Error(ErrorKind::UnknownFormat, "unknown format '" + std::string(name) + "'");
}

namespace detail {

inline std::string inputs_inline(const std::vector<CaseInput>& inputs) {
  std::string out;
  for (const auto& in : inputs) {
    if (!out.empty()) out += ' ';
    out += in.name + '=' + in.value;
  }
  return out;
}

// Quotes a CSV field only when it needs it.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace detail

// JSON document for a sweep report. The "counterexample" key is present only
// when something failed.
inline nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["checked"] = report.checked();
  doc["passed"] = report.passed();
  doc["failed"] = report.failed();
  auto targets = nlohmann::ordered_json::array();
  for (const auto& t : report.targets) {
    targets.push_back({{"target", std::string(to_string(t.target))},
                       {"checked", t.checked},
                       {"passed", t.passed},
                       {"failed", t.failed}});
  }
  doc["targets"] = std::move(targets);
  if (report.first_counterexample) {
    const auto& cx = *report.first_counterexample;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& in : cx.inputs) inputs[in.name] = in.value;
    doc["counterexample"] = {{"target", std::string(to_string(cx.target))},
                             {"inputs", std::move(inputs)},
                             {"expected", to_decimal(cx.expected)},
                             {"actual", to_decimal(cx.actual)}};
  }
  doc["wall_time_ms"] = report.wall_time_ms;
  return doc;
}

inline VerificationReport parse_report_json(std::string_view text) {
  VerificationReport report;
  try {
    const auto doc = nlohmann::ordered_json::parse(text);
    for (const auto& t : doc.at("targets")) {
      report.targets.push_back({parse_target(t.at("target").get<std::string>()),
                                t.at("checked").get<std::uint64_t>(), t.at("passed").get<std::uint64_t>(),
                                t.at("failed").get<std::uint64_t>()});
    }
    if (doc.contains("counterexample")) {
      const auto& cx = doc.at("counterexample");
      Counterexample out;
      out.target = parse_target(cx.at("target").get<std::string>());
      for (const auto& [name, value] : cx.at("inputs").items()) out.inputs.push_back({name, value.get<std::string>()});
      out.expected = parse_seq_value(cx.at("expected").get<std::string>());
      out.actual = parse_seq_value(cx.at("actual").get<std::string>());
      report.first_counterexample = std::move(out);
    }
    report.wall_time_ms = doc.at("wall_time_ms").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad report document: ") + e.what());
  }
  return report;
}

inline std::string report_render(const VerificationReport& report, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json:
      os << report_to_json(report).dump(2) << '\n';
      break;
    case Format::csv: {
      os << "target,checked,passed,failed,counterexample_inputs,expected,actual\n";
      for (const auto& t : report.targets) {
        os << to_string(t.target) << ',' << t.checked << ',' << t.passed << ',' << t.failed << ',';
        const auto& cx = report.first_counterexample;
        if (cx && cx->target == t.target) {
          os << detail::csv_field(detail::inputs_inline(cx->inputs)) << ',' << to_decimal(cx->expected) << ','
             << to_decimal(cx->actual);
        } else {
          os << ",,";
        }
        os << '\n';
      }
      break;
    }
    case Format::text: {
      for (const auto& t : report.targets) {
        os << std::left << std::setw(10) << to_string(t.target) << " checked=" << t.checked
           << " passed=" << t.passed << " failed=" << t.failed << '\n';
      }
      os << "total      checked=" << report.checked() << " passed=" << report.passed()
         << " failed=" << report.failed() << '\n';
      if (const auto& cx = report.first_counterexample) {
        os << "first counterexample:\n"
           << "  target:   " << to_string(cx->target) << '\n'
           << "  inputs:   " << detail::inputs_inline(cx->inputs) << '\n'
           << "  expected: " << to_decimal(cx->expected) << '\n'
           << "  actual:   " << to_decimal(cx->actual) << '\n';
      }
      os << "wall time: " << std::fixed << std::setprecision(3) << report.wall_time_ms << " ms\n";
      break;
    }
  }
  return os.str();
}

inline std::string report_render(const std::vector<BenchRecord>& records, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : records) {
        arr.push_back({{"strategy", std::string(to_string(r.strategy))},
                       {"n", r.n},
                       {"m", r.m},
                       {"result_digits", r.result_digits},
                       {"wall_time_ns", r.wall_time_ns}});
      }
      nlohmann::ordered_json doc;
      doc["records"] = std::move(arr);
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      os << "strategy,n,m,result_digits,wall_time_ns\n";
      for (const auto& r : records)
        os << to_string(r.strategy) << ',' << r.n << ',' << r.m << ',' << r.result_digits << ',' << r.wall_time_ns
           << '\n';
      break;
    case Format::text:
      os << std::left << std::setw(15) << "strategy" << std::right << std::setw(8) << "n" << std::setw(8) << "m"
         << std::setw(10) << "digits" << std::setw(16) << "median_ns" << '\n';
      for (const auto& r : records)
        os << std::left << std::setw(15) << to_string(r.strategy) << std::right << std::setw(8) << r.n
           << std::setw(8) << r.m << std::setw(10) << r.result_digits << std::setw(16) << r.wall_time_ns << '\n';
      break;
  }
  return os.str();
}

inline std::string report_render(const TheoremTable& table, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json doc;
      doc["theorem"] = static_cast<int>(table.theorem);
      doc["n"] = table.query.n;
      doc["m"] = table.query.m;
      if (table.theorem == Theorem::generalized) {
        doc["g0"] = to_decimal(table.seed.g0);
        doc["g1"] = to_decimal(table.seed.g1);
      }
      doc["lucas_n"] = to_decimal(table.lucas_n);
      auto terms = nlohmann::ordered_json::array();
      for (const auto& t : table.terms) {
        terms.push_back({{"sum", t.sum},
                         {"i", t.i},
                         {"coefficient", to_decimal(t.coefficient)},
                         {"lucas_exponent", t.lucas_exponent},
                         {"lucas_power", to_decimal(t.lucas_power)},
                         {"sign", t.sign},
                         {"prefactor", to_decimal(t.prefactor)},
                         {"value", to_decimal(t.value)}});
      }
      doc["terms"] = std::move(terms);
      doc["total"] = to_decimal(table.total);
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      os << "sum,i,coefficient,lucas_exponent,lucas_power,sign,prefactor,value\n";
      for (const auto& t : table.terms)
        os << t.sum << ',' << t.i << ',' << to_decimal(t.coefficient) << ',' << t.lucas_exponent << ','
           << to_decimal(t.lucas_power) << ',' << t.sign << ',' << to_decimal(t.prefactor) << ','
           << to_decimal(t.value) << '\n';
      os << "total,,,,,,," << to_decimal(table.total) << '\n';
      break;
    case Format::text: {
      const auto& q = table.query;
      os << "theorem " << static_cast<int>(table.theorem) << ", n=" << q.n << ", m=" << q.m;
      if (table.theorem == Theorem::generalized)
        os << ", G0=" << to_decimal(table.seed.g0) << ", G1=" << to_decimal(table.seed.g1);
      os << ", L_n=" << to_decimal(table.lucas_n) << '\n';
      os << std::left << std::setw(5) << "sum" << std::setw(6) << "i" << std::setw(14) << "coefficient"
         << std::setw(22) << "lucas_power" << std::setw(6) << "sign" << std::setw(14) << "prefactor" << "value\n";
      for (const auto& t : table.terms) {
        std::string power = "L^" + std::to_string(t.lucas_exponent) + "=" + to_decimal(t.lucas_power);
        os << std::left << std::setw(5) << t.sum << std::setw(6) << t.i << std::setw(14) << to_decimal(t.coefficient)
           << std::setw(22) << power << std::setw(6) << (t.sign > 0 ? "+1" : "-1") << std::setw(14)
           << to_decimal(t.prefactor) << to_decimal(t.value) << '\n';
      }
      os << "total: " << to_decimal(table.total) << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace fibmulti
