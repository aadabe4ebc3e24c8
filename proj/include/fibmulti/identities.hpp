#pragma once

// Multiple-index identities: F_{nm}, L_{nm} and G_{nm} as binomial sums in
// powers of L_n, plus the d'Ocagne residual. None of the evaluators below
// touches an index-nm oracle.

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include "fibmulti/binomial_engine.hpp"
#include "fibmulti/core_sequences.hpp"
#include "fibmulti/types.hpp"

namespace fibmulti {

struct MultipleIndexQuery {
  SeqIndex n = 1;
  SeqIndex m = 1;
};

struct DocagnePair {
  SeqIndex a = 0;
  SeqIndex b = 0;
};

enum class Theorem { fibonacci = 1, lucas = 2, generalized = 3 };

inline void validate(const MultipleIndexQuery& q) {
  if (q.n < 1 || q.m < 1)
    throw Error(ErrorKind::DomainError,
                "multiple-index identities require n >= 1 and m >= 1 (got n=" + std::to_string(q.n) +
                    ", m=" + std::to_string(q.m) + ")");
}

// (-1)^i * (-1)^{n i} folded into (-1)^{i (n + 1)}.
constexpr int sign_factor(SeqIndex i, SeqIndex n) noexcept {
  // i(n+1) is odd iff i is odd and n is even
  return (i % 2 != 0 && n % 2 == 0) ? -1 : 1;
}

namespace detail {

// Calls visit(sum, i, coefficient, lucas_exponent, lucas_power, sign) for each
// summand of the given theorem. Within a sum, i runs downwards so the Lucas
// power only ever needs one multiplication by L_n^2 per step. Sum 2 exists
// only for the generalized identity (the G_0 part).
template <typename Visitor>
void visit_terms(Theorem theorem, const MultipleIndexQuery& q, const SeqValue& lucas_n, Visitor&& visit) {
  const SeqIndex n = q.n;
  const SeqIndex m = q.m;
  const SeqValue lucas_sq = lucas_n * lucas_n;

  auto run = [&](int sum, SeqIndex lead, SeqIndex i_lo, SeqIndex i_hi, auto&& coeff) {
    if (i_hi < i_lo) return;
    SeqIndex exponent = lead - 2 * i_hi;
    SeqValue power = (exponent == 1) ? lucas_n : SeqValue(1);  // 0^0 = 1
    for (SeqIndex i = i_hi; i >= i_lo; --i) {
      visit(sum, i, coeff(i), exponent, static_cast<const SeqValue&>(power), sign_factor(i, n));
      if (i > i_lo) {
        power *= lucas_sq;
        exponent += 2;
      }
    }
  };

  switch (theorem) {
    case Theorem::fibonacci:
      run(1, m - 1, 0, (m - 1) / 2, [m](SeqIndex i) { return binomial(m - 1 - i, i); });
      break;
    case Theorem::lucas:
      run(1, m, 0, m / 2, [m](SeqIndex i) { return waring_coeff(m, i); });
      break;
    case Theorem::generalized:
      run(1, m - 1, 0, (m - 1) / 2, [m](SeqIndex i) { return binomial(m - 1 - i, i); });
      run(2, m, 1, m / 2, [m](SeqIndex i) { return binomial(m - 1 - i, i - 1); });
      break;
  }
}

// Signed sums, indexed by sum number (1 or 2).
inline std::pair<SeqValue, SeqValue> theorem_sums(Theorem theorem, const MultipleIndexQuery& q,
                                                  const SeqValue& lucas_n) {
  SeqValue sums[2] = {0, 0};
  SeqValue term;
  visit_terms(theorem, q, lucas_n,
              [&](int sum, SeqIndex, const SeqValue& coeff, SeqIndex, const SeqValue& power, int sign) {
                assert(q.n % 2 == 0 || sign == 1);
                term = coeff * power;
                if (sign > 0)
                  sums[sum - 1] += term;
                else
                  sums[sum - 1] -= term;
              });
  return {sums[0], sums[1]};
}

}  // namespace detail

// F_{nm} = F_n * sum_i C(m-1-i, i) L_n^{m-1-2i} (-1)^{i(n+1)}
inline SeqValue fib_multiple(const MultipleIndexQuery& q) {
  validate(q);
  return fib(q.n) * detail::theorem_sums(Theorem::fibonacci, q, lucas(q.n)).first;
}

// L_{nm} = sum_i m/(m-i) C(m-i, i) L_n^{m-2i} (-1)^{i(n+1)}
inline SeqValue lucas_multiple(const MultipleIndexQuery& q) {
  validate(q);
  return detail::theorem_sums(Theorem::lucas, q, lucas(q.n)).first;
}

// G_{nm} = G_n * sum_{i>=0} C(m-1-i, i) L_n^{m-1-2i} (-1)^{i(n+1)}
//        + G_0 * sum_{i>=1} C(m-1-i, i-1) L_n^{m-2i} (-1)^{i(n+1)}
// The second sum is empty for m = 1.
inline SeqValue gen_multiple(const GeneralizedSeed& seed, const MultipleIndexQuery& q) {
  validate(q);
  auto [first, second] = detail::theorem_sums(Theorem::generalized, q, lucas(q.n));
  return gen_fib(seed, q.n) * first + seed.g0 * second;
}

// F_a F_{b-1} - F_{a-1} F_b - (-1)^{a+1} F_{b-a}; zero for every integer pair.
inline SeqValue docagne_residual(const DocagnePair& p) {
  const SeqIndex a = p.a;
  const SeqIndex b = p.b;
  SeqValue lhs = fib(a) * fib(b - 1) - fib(a - 1) * fib(b);
  SeqValue rhs = fib(b - a);
  if (a % 2 == 0) rhs = -rhs;  // (-1)^{a+1}
  return lhs - rhs;
}

// One summand of an identity, with everything needed to print it.
struct TheoremTerm {
  int sum = 1;  // 1: G_n (or F_n) part, 2: G_0 part
  SeqIndex i = 0;
  SeqValue coefficient;
  SeqIndex lucas_exponent = 0;
  SeqValue lucas_power;
  int sign = 1;
  SeqValue prefactor;
  SeqValue value;  // prefactor * coefficient * lucas_power * sign
};

struct TheoremTable {
  Theorem theorem = Theorem::fibonacci;
  MultipleIndexQuery query;
  GeneralizedSeed seed;
  SeqValue lucas_n;
  std::vector<TheoremTerm> terms;  // ordered by (sum, i)
  SeqValue total;
};

// Term-by-term expansion. The seed is only read for the generalized identity.
inline TheoremTable theorem_table(Theorem theorem, const MultipleIndexQuery& q,
                                  const GeneralizedSeed& seed = {0, 1}) {
  validate(q);
  TheoremTable table;
  table.theorem = theorem;
  table.query = q;
  table.seed = seed;
  table.lucas_n = lucas(q.n);

  SeqValue prefactors[2] = {1, 0};
  if (theorem == Theorem::fibonacci) prefactors[0] = fib(q.n);
  if (theorem == Theorem::generalized) {
    prefactors[0] = gen_fib(seed, q.n);
    prefactors[1] = seed.g0;
  }

  detail::visit_terms(theorem, q, table.lucas_n,
                      [&](int sum, SeqIndex i, const SeqValue& coeff, SeqIndex exponent, const SeqValue& power,
                          int sign) {
                        TheoremTerm t;
                        t.sum = sum;
                        t.i = i;
                        t.coefficient = coeff;
                        t.lucas_exponent = exponent;
                        t.lucas_power = power;
                        t.sign = sign;
                        t.prefactor = prefactors[sum - 1];
                        t.value = t.prefactor * coeff * power * sign;
                        table.terms.push_back(std::move(t));
                      });
  std::sort(table.terms.begin(), table.terms.end(), [](const TheoremTerm& x, const TheoremTerm& y) {
    return x.sum != y.sum ? x.sum < y.sum : x.i < y.i;
  });
  table.total = 0;
  for (const auto& t : table.terms) table.total += t.value;
  return table;
}

// Seeds used by sweeps when none are supplied; includes zero and negative seeds.
inline std::vector<GeneralizedSeed> default_seeds() {
  return {{0, 1}, {2, 1}, {1, 1}, {3, -5}, {-2, 7}, {0, 0}};
}

}  // namespace fibmulti
