#pragma once

// Binomial coefficients and the two Waring expansions of x^m -/+ y^m in
// terms of S = x + y and P = xy, evaluated over the integers.

#include <cstdint>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "fibmulti/types.hpp"

namespace fibmulti {

struct WaringArguments {
  SeqValue s;
  SeqValue p;
  SeqIndex m = 1;
};

// Pascal triangle built row by row on demand. Rows are never modified after
// they are appended, so readers only need a shared lock.
class BinomialCache {
 public:
  explicit BinomialCache(SeqIndex row_limit = kDefaultRowLimit) : row_limit_(row_limit) {
    rows_.push_back({SeqValue(1)});
  }

  BinomialCache(const BinomialCache&) = delete;
  BinomialCache& operator=(const BinomialCache&) = delete;

  static constexpr SeqIndex kDefaultRowLimit = 512;

  // Rows above row_limit() are not stored; get() computes them directly.
  SeqIndex row_limit() const noexcept { return row_limit_; }

  SeqIndex max_n() const {
    std::shared_lock lock(mutex_);
    return static_cast<SeqIndex>(rows_.size()) - 1;
  }

  SeqValue get(SeqIndex n, SeqIndex k) const {
    if (n < 0) throw Error(ErrorKind::NegativeN, "binomial requires n >= 0");
    if (k < 0 || k > n) return 0;
    if (n > row_limit_) {
      SeqValue out;
      mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
      return out;
    }
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<SeqIndex>(rows_.size())) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<SeqIndex>(rows_.size()) <= n) {
      const auto& prev = rows_.back();
      std::vector<SeqValue> row(prev.size() + 1);
      row.front() = 1;
      row.back() = 1;
      for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  SeqIndex row_limit_;
  mutable std::shared_mutex mutex_;
  // deque keeps row addresses stable while appending
  mutable std::deque<std::vector<SeqValue>> rows_;
};

inline BinomialCache& default_binomial_cache() {
  static BinomialCache cache;
  return cache;
}

// C(n, k); zero when k < 0 or k > n.
inline SeqValue binomial(SeqIndex n, SeqIndex k) { return default_binomial_cache().get(n, k); }

/// Integer value of m/(m-i) * C(m-i, i), computed as C(m-i, i) + C(m-i-1, i-1).
/// Requires m >= 1 and 0 <= i <= floor(m/2).
inline SeqValue waring_coeff(SeqIndex m, SeqIndex i) {
  if (m < 1) throw Error(ErrorKind::InvalidPower, "waring_coeff requires m >= 1");
  if (i < 0 || i > m / 2) throw Error(ErrorKind::IndexOutOfRange, "waring_coeff requires 0 <= i <= m/2");
  SeqValue out = binomial(m - i, i);
  if (i >= 1) out += binomial(m - i - 1, i - 1);
  return out;
}

namespace detail {

inline std::vector<SeqValue> ascending_powers(const SeqValue& base, SeqIndex top) {
  std::vector<SeqValue> out;
  out.reserve(static_cast<std::size_t>(top) + 1);
  out.emplace_back(1);
  for (SeqIndex e = 1; e <= top; ++e) out.push_back(out.back() * base);
  return out;
}

// sum_{i=0}^{top} (-1)^i coeff(i) S^{lead - 2i} P^i, with i walked downwards
// so the S power grows by S^2 each step.
template <typename Coeff>
SeqValue waring_sum(const WaringArguments& args, SeqIndex lead, SeqIndex top, Coeff&& coeff) {
  const std::vector<SeqValue> p_pow = ascending_powers(args.p, top);
  const SeqValue s_sq = args.s * args.s;
  SeqValue s_pow = (lead - 2 * top == 1) ? args.s : SeqValue(1);
  SeqValue total = 0;
  SeqValue term;
  for (SeqIndex i = top; i >= 0; --i) {
    term = coeff(i);
    term *= s_pow;
    term *= p_pow[static_cast<std::size_t>(i)];
    if (i % 2 == 0)
      total += term;
    else
      total -= term;
    if (i > 0) s_pow *= s_sq;
  }
  return total;
}

}  // namespace detail

// (x^m - y^m)/(x - y) as a polynomial in S and P.
inline SeqValue waring_diff_poly(const WaringArguments& args) {
  const SeqIndex m = args.m;
  if (m < 1) throw Error(ErrorKind::InvalidPower, "waring_diff_poly requires m >= 1");
  return detail::waring_sum(args, m - 1, (m - 1) / 2, [m](SeqIndex i) { return binomial(m - 1 - i, i); });
}

// x^m + y^m as a polynomial in S and P.
inline SeqValue waring_sum_poly(const WaringArguments& args) {
  const SeqIndex m = args.m;
  if (m < 1) throw Error(ErrorKind::InvalidPower, "waring_sum_poly requires m >= 1");
  return detail::waring_sum(args, m, m / 2, [m](SeqIndex i) { return waring_coeff(m, i); });
}

}  // namespace fibmulti
