#pragma once

// Reference evaluators for F_k, L_k and G_k. Two independent routes are kept
// for Fibonacci numbers: the plain recurrence and fast doubling.

#include <bit>
#include <cstdint>
#include <utility>

#include "fibmulti/types.hpp"

namespace fibmulti {

namespace detail {

inline std::uint64_t magnitude(SeqIndex k) {
  return k < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
}

// Runs the recurrence forward from (first, second) and returns term j.
inline SeqValue iterate(SeqValue first, SeqValue second, std::uint64_t j) {
  if (j == 0) return first;
  for (std::uint64_t step = 1; step < j; ++step) {
    first += second;
    swap(first, second);
  }
  return second;
}

}  // namespace detail

// F_k by the recurrence. Negative indices use F_{-j} = (-1)^{j+1} F_j.
inline SeqValue fib(SeqIndex k) {
  const std::uint64_t j = detail::magnitude(k);
  SeqValue v = detail::iterate(0, 1, j);
  if (k < 0 && j % 2 == 0) v = -v;
  return v;
}

// L_k by the recurrence. Negative indices use L_{-j} = (-1)^j L_j.
inline SeqValue lucas(SeqIndex k) {
  const std::uint64_t j = detail::magnitude(k);
  SeqValue v = detail::iterate(2, 1, j);
  if (k < 0 && j % 2 == 1) v = -v;
  return v;
}

// G_k for k >= 0.
inline SeqValue gen_fib(const GeneralizedSeed& seed, SeqIndex k) {
  if (k < 0) throw Error(ErrorKind::NegativeIndexUnsupported, "gen_fib requires k >= 0");
  return detail::iterate(seed.g0, seed.g1, static_cast<std::uint64_t>(k));
}

/// (F_j, F_{j+1}) by fast doubling:
///   F_{2t}   = F_t (2 F_{t+1} - F_t)
///   F_{2t+1} = F_t^2 + F_{t+1}^2
inline std::pair<SeqValue, SeqValue> fib_pair(std::uint64_t j) {
  SeqValue a = 0;  // F_t
  SeqValue b = 1;  // F_{t+1}
  SeqValue c, d;
  for (int bit = std::bit_width(j) - 1; bit >= 0; --bit) {
    c = b * 2;
    c -= a;
    c *= a;
    d = a * a;
    d += b * b;
    if ((j >> bit) & 1u) {
      a = d;
      b = c + d;
    } else {
      a = c;
      b = d;
    }
  }
  return {a, b};
}

inline SeqValue fib_fast_doubling(SeqIndex k) {
  const std::uint64_t j = detail::magnitude(k);
  SeqValue v = fib_pair(j).first;
  if (k < 0 && j % 2 == 0) v = -v;
  return v;
}

// L_k = 2 F_{k+1} - F_k, from the fast doubling pair.
inline SeqValue lucas_fast_doubling(SeqIndex k) {
  const std::uint64_t j = detail::magnitude(k);
  auto [f, f_next] = fib_pair(j);
  SeqValue v = 2 * f_next - f;
  if (k < 0 && j % 2 == 1) v = -v;
  return v;
}

// G_k = G_1 F_k + G_0 F_{k-1}, k >= 1. Never runs the G recurrence.
inline SeqValue gen_fib_decompose(const GeneralizedSeed& seed, SeqIndex k) {
  if (k < 1) throw Error(ErrorKind::NegativeIndexUnsupported, "gen_fib_decompose requires k >= 1");
  auto [f_prev, f] = fib_pair(static_cast<std::uint64_t>(k - 1));
  return seed.g1 * f + seed.g0 * f_prev;
}

}  // namespace fibmulti
