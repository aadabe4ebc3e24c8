#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fibmulti {

// Sequence index (n, m, k, a, b).
using SeqIndex = std::int64_t;

// Exact value of a sequence term or partial sum.
using SeqValue = mpz_class;

// Initial conditions (G_0, G_1) of a generalized Fibonacci sequence.
struct GeneralizedSeed {
  SeqValue g0;
  SeqValue g1;

  friend bool operator==(const GeneralizedSeed& a, const GeneralizedSeed& b) {
    return a.g0 == b.g0 && a.g1 == b.g1;
  }
};

enum class ErrorKind {
  NegativeIndexUnsupported,
  NegativeN,
  IndexOutOfRange,
  InvalidPower,
  DomainError,
  ConfigError,
  UnknownFormat,
  ParseError,
  ValueMismatch,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NegativeIndexUnsupported: return "NegativeIndexUnsupported";
    case ErrorKind::NegativeN: return "NegativeN";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidPower: return "InvalidPower";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::UnknownFormat: return "UnknownFormat";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValueMismatch: return "ValueMismatch";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Strict decimal parse: optional '-', then one or more digits.
inline SeqValue parse_seq_value(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw Error(ErrorKind::ParseError, "empty integer '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw Error(ErrorKind::ParseError, "malformed integer '" + std::string(text) + "'");
  }
  return SeqValue(std::string(text), 10);
}

inline std::string to_decimal(const SeqValue& v) { return v.get_str(10); }

// Number of decimal digits of |v| (0 has one digit).
inline std::size_t decimal_digits(const SeqValue& v) {
  std::string s = v.get_str(10);
  return v < 0 ? s.size() - 1 : s.size();
}

inline SeqIndex checked_product(SeqIndex n, SeqIndex m) {
  SeqIndex out = 0;
  if (__builtin_mul_overflow(n, m, &out))
    throw Error(ErrorKind::DomainError, "index product n*m overflows");
  return out;
}

}  // namespace fibmulti
