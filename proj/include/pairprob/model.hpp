#pragma once

#include <compare>
#include <optional>

#include "pairprob/numerics.hpp"

namespace pairprob {

/// A snapshot of the pairing process: I infected devices b_1..b_I and S clean
/// devices w_1..w_S, all in mutual range. Devices carry no identity beyond
/// their index.
struct Configuration {
  long long infected = 0;
  long long clean = 0;

  Configuration(long long infected_count, long long clean_count)
      : infected(infected_count), clean(clean_count) {
    if (infected < 0 || clean < 0)
      throw std::invalid_argument("Configuration: counts must be nonnegative");
  }

  long long devices() const noexcept { return infected + clean; }

  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// Whether a configuration admits the one-device-left-over outcome, and the
/// unique bb-pairing count that realizes it.
struct DaggerInfo {
  bool is_dagger = false;
  std::optional<long long> forced_j;
};

/// 1 exactly when I > S, I+S is odd, and j == (I-S-1)/2; 0 otherwise.
/// Computed as H(I-S-1) * delta((I+S+1) mod 2) * delta(2j-I+S+1).
inline int dagger_indicator(const Configuration& cfg, long long j) noexcept {
  const long long i = cfg.infected, s = cfg.clean;
  return heaviside(i - s - 1) * kronecker((i + s + 1) % 2) *
         kronecker(2 * j - i + s + 1);
}

inline DaggerInfo dagger_info(const Configuration& cfg) noexcept {
  const long long i = cfg.infected, s = cfg.clean;
  if (i > s && (i + s) % 2 == 1) return {true, (i - s - 1) / 2};
  return {false, std::nullopt};
}

/// Fewest bb-pairings any final wiring of cfg can contain:
/// 0 for I <= S, (I-S)/2 for even I-S, (I-S-1)/2 for odd I-S.
inline long long min_bb_pairings(const Configuration& cfg) {
  const long long i = cfg.infected, s = cfg.clean;
  if (heaviside(i - s - 1) == 0) return 0;
  const long long numer = i - s - (i + s) % 2;
  if (numer % 2 != 0)
    throw std::logic_error("min_bb_pairings: parity bookkeeping broke");
  return numer / 2;
}

/// Most bb-pairings any wiring can contain: floor(I/2).
inline long long max_bb_pairings(const Configuration& cfg) noexcept {
  return cfg.infected / 2;
}

}  // namespace pairprob
