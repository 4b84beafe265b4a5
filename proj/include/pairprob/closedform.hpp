#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "pairprob/model.hpp"

namespace pairprob {

/// A product of machine-sized integer factors: value = prod(num) / prod(den).
/// Every formula piece below is emitted in this shape. The exact backend
/// folds the factors into big rationals; the float backend interleaves large
/// and small factors so intermediate products stay inside double range even
/// when a single group (a factorial, a binomial product) would not.
struct FactorList {
  std::vector<long long> num;
  std::vector<long long> den;

  void push_num(long long v) { num.push_back(v); }
  void push_den(long long v) { den.push_back(v); }
};

namespace detail {

FactorList wiring_probability_factors(const Configuration& cfg, long long j);
FactorList bb_selection_factors(long long infected, long long j);
FactorList unpaired_dagger_factors(const Configuration& cfg, long long j,
                                   long long h);
FactorList target_selection_factors(const Configuration& cfg, long long j);
FactorList generic_selection_factors(const Configuration& cfg, long long j);

}  // namespace detail

/// Greedy interleaved fold: multiply a numerator factor while the running
/// product sits below 1, divide by a denominator factor otherwise. With all
/// factors machine-sized and the true value a probability-scale number, the
/// running product can neither overflow nor prematurely underflow.
double fold_interleaved(std::initializer_list<const FactorList*> parts);

template <class Backend>
typename Backend::Scalar fold_factors(const FactorList& factors) {
  if constexpr (std::is_same_v<Backend, ExactBackend>) {
    BigInt num{1}, den{1};
    for (long long v : factors.num) num *= v;
    for (long long v : factors.den) den *= v;
    return Rational(num, den);
  } else {
    return fold_interleaved({&factors});
  }
}

/// Probability that one specific final wiring with exactly j bb-pairings
/// occurs: the product of 1/(I+S-1-2k) over the choosing turns. Zero when j
/// lies outside [min_bb_pairings, floor(I/2)].
template <class Backend>
typename Backend::Scalar wiring_probability(const Configuration& cfg,
                                            long long j) {
  if (j > max_bb_pairings(cfg) || j < min_bb_pairings(cfg))
    return Backend::from_int(0);
  return fold_factors<Backend>(detail::wiring_probability_factors(cfg, j));
}

/// Number of bb-selection patterns that leave b_h unpaired, in the dagger
/// case with j >= 2. Case-split on how far h sits from the tail: every
/// device past b_h must be absorbed by an earlier one, which pins I-h of the
/// j pairings and leaves the rest to be chosen among b_1..b_{h-1}.
template <class Backend>
typename Backend::Scalar count_unpaired_dagger(const Configuration& cfg,
                                               long long j, long long h) {
  const DaggerInfo dag = dagger_info(cfg);
  if (!dag.is_dagger || *dag.forced_j != j || j < 2)
    throw std::domain_error(
        "count_unpaired_dagger: requires the dagger case with j >= 2");
  if (h < 1 || h > cfg.infected)
    throw std::domain_error("count_unpaired_dagger: h out of range");
  if (h <= cfg.clean) return Backend::from_int(0);
  return fold_factors<Backend>(detail::unpaired_dagger_factors(cfg, j, h));
}

/// Number of ways to select j bb-pairings. Outside the dagger case this is
/// the paired-selection product over j picks divided by j!; the dagger case
/// splits on j (one pattern for j=0, C(I,2)-1 for j=1, and the sum of
/// per-unpaired-device counts for j >= 2).
template <class Backend>
typename Backend::Scalar count_bb_selections(const Configuration& cfg,
                                             long long j) {
  if (j < min_bb_pairings(cfg) || j > max_bb_pairings(cfg))
    throw std::domain_error("count_bb_selections: j outside admissible range");
  if (dagger_indicator(cfg, j)) {
    if (j == 0) return Backend::from_int(1);
    if (j == 1) return Backend::from_bigint(binomial(cfg.infected, 2) - 1);
    typename Backend::Scalar total = Backend::from_int(0);
    for (long long h = cfg.clean + 1; h <= cfg.infected; ++h)
      total = total + count_unpaired_dagger<Backend>(cfg, j, h);
    return total;
  }
  return fold_factors<Backend>(
      detail::bb_selection_factors(cfg.infected, j));
}

/// Number of wirings, for one fixed bb-selection, in which the designated
/// clean device w_t is paired: S! in the dagger case (every clean device is
/// paired), otherwise (I-2j)! * C(S-1, I-1-2j) with the zero convention.
template <class Backend>
typename Backend::Scalar count_target_selections(const Configuration& cfg,
                                                 long long j) {
  if (cfg.clean == 0)
    throw std::domain_error("count_target_selections: no clean device exists");
  return fold_factors<Backend>(detail::target_selection_factors(cfg, j));
}

/// Number of ways to assign clean devices for one fixed bb-selection: S! in
/// the dagger case, otherwise the dispositions of I-2j devices out of S.
/// Outside the dagger case I-2j > S admits no wiring at all and is rejected.
template <class Backend>
typename Backend::Scalar count_generic_selections(const Configuration& cfg,
                                                  long long j) {
  if (!dagger_indicator(cfg, j) && cfg.infected - 2 * j > cfg.clean)
    throw std::domain_error(
        "count_generic_selections: more leftover infected than clean devices");
  return fold_factors<Backend>(detail::generic_selection_factors(cfg, j));
}

/// P(I,S) as the sum over admissible j of
///   wiring_probability * count_bb_selections * count_target_selections.
/// I = 0 and S = 0 short-circuit to the recursion's base values before any
/// counting formula is touched.
template <class Backend>
typename Backend::Scalar closed_form_P(const Configuration& cfg) {
  const long long i = cfg.infected, s = cfg.clean;
  if (i == 0 || s == 0) return Backend::from_int(0);
  const long long lo = min_bb_pairings(cfg);
  const long long hi = max_bb_pairings(cfg);
  if constexpr (std::is_same_v<Backend, ExactBackend>) {
    Rational total{0};
    for (long long j = lo; j <= hi; ++j) {
      total += wiring_probability<Backend>(cfg, j) *
               count_bb_selections<Backend>(cfg, j) *
               count_target_selections<Backend>(cfg, j);
    }
    return total;
  } else {
    double total = 0.0;
    for (long long j = lo; j <= hi; ++j) {
      const FactorList wiring = detail::wiring_probability_factors(cfg, j);
      const FactorList target = detail::target_selection_factors(cfg, j);
      if (dagger_indicator(cfg, j)) {
        if (j >= 2) {
          // Per-unpaired-device split: each summand is itself a probability
          // contribution, so it interleaves safely on its own.
          for (long long h = s + 1; h <= i; ++h) {
            const FactorList part = detail::unpaired_dagger_factors(cfg, j, h);
            total += fold_interleaved({&wiring, &part, &target});
          }
        } else if (j == 1) {
          FactorList count;
          count.push_num(i * (i - 1) / 2 - 1);
          total += fold_interleaved({&wiring, &count, &target});
        } else {
          total += fold_interleaved({&wiring, &target});
        }
      } else {
        const FactorList bb = detail::bb_selection_factors(i, j);
        total += fold_interleaved({&wiring, &bb, &target});
      }
    }
    return total;
  }
}

/// One row of the per-j decomposition behind closed_form_P.
template <class Backend>
struct TermBreakdown {
  long long j = 0;
  typename Backend::Scalar wiring_prob{};
  typename Backend::Scalar bb_count{};
  typename Backend::Scalar target_count{};
  typename Backend::Scalar generic_count{};
  typename Backend::Scalar term_value{};
};

/// All admissible j with their factor values; term_value sums to
/// closed_form_P. Requires I >= 1 and S >= 1.
template <class Backend>
std::vector<TermBreakdown<Backend>> term_breakdown(const Configuration& cfg) {
  if (cfg.infected < 1 || cfg.clean < 1)
    throw std::invalid_argument("term_breakdown: requires I >= 1 and S >= 1");
  std::vector<TermBreakdown<Backend>> rows;
  for (long long j = min_bb_pairings(cfg); j <= max_bb_pairings(cfg); ++j) {
    TermBreakdown<Backend> row;
    row.j = j;
    row.wiring_prob = wiring_probability<Backend>(cfg, j);
    row.bb_count = count_bb_selections<Backend>(cfg, j);
    row.target_count = count_target_selections<Backend>(cfg, j);
    row.generic_count = count_generic_selections<Backend>(cfg, j);
    row.term_value = row.wiring_prob * row.bb_count * row.target_count;
    rows.push_back(std::move(row));
  }
  return rows;
}

/// JSON array of {j, wiring_prob, bb_count, target_count, generic_count,
/// term}; exact values serialize as "p/q" strings, float values as numbers.
std::string term_breakdown_json(const Configuration& cfg, BackendTag backend);

}  // namespace pairprob
