#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pairprob/model.hpp"

namespace pairprob {

/// Raised by deadline-armed probes when an engine run exceeds its budget.
struct EngineTimeout : std::runtime_error {
  EngineTimeout() : std::runtime_error("engine run exceeded its deadline") {}
};

/// Instrumentation hook for the naive engine: counts self-invocations and,
/// when armed, aborts runs that blow past a deadline. The deadline is only
/// consulted every 65536 calls so timing stays representative.
class RecursionProbe {
 public:
  std::uint64_t calls() const noexcept { return calls_; }

  void arm_deadline(std::chrono::steady_clock::time_point deadline) {
    deadline_ = deadline;
    armed_ = true;
  }

  void tick() {
    ++calls_;
    if (armed_ && (calls_ & 0xFFFF) == 0 &&
        std::chrono::steady_clock::now() > deadline_) {
      throw EngineTimeout{};
    }
  }

 private:
  std::uint64_t calls_ = 0;
  bool armed_ = false;
  std::chrono::steady_clock::time_point deadline_{};
};

/// Insert-once cache keyed on (I, S). Entries are never overwritten; lookups
/// and insertions may happen concurrently from several threads, which at
/// worst duplicate work before agreeing on the same value.
template <class Backend>
class MemoTable {
 public:
  using Scalar = typename Backend::Scalar;

  std::optional<Scalar> find(const Configuration& cfg) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find(key(cfg));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Configuration& cfg, const Scalar& value) {
    std::lock_guard lock(mu_);
    entries_.emplace(key(cfg), value);  // first writer wins
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
  }

 private:
  static std::pair<long long, long long> key(const Configuration& cfg) {
    return {cfg.infected, cfg.clean};
  }

  mutable std::mutex mu_;
  std::map<std::pair<long long, long long>, Scalar> entries_;
};

namespace detail {

// Base cases are tested in a fixed order: I == 0, then S == 0, then I == 1,
// so (0,0) resolves through the first branch and (1,0) through the second.
template <class Backend>
typename Backend::Scalar recurse_plain(long long i, long long s,
                                       RecursionProbe* probe) {
  if (probe) probe->tick();
  if (i == 0) return Backend::from_int(0);
  if (s == 0) return Backend::from_int(0);
  if (i == 1) return Backend::ratio(1, s);
  const long long m = i + s - 1;
  return Backend::ratio(1, m) +
         Backend::ratio(s - 1, m) * recurse_plain<Backend>(i - 1, s - 1, probe) +
         Backend::ratio(i - 1, m) * recurse_plain<Backend>(i - 2, s, probe);
}

}  // namespace detail

/// P(I,S) by direct second-order recursion with no caching of any kind.
/// Exponential in I; exists to expose exactly that cost. Depth is at most
/// I+S, so the stack is safe for the supported range (I, S <= 200).
template <class Backend>
typename Backend::Scalar recursive_P(const Configuration& cfg,
                                     RecursionProbe* probe = nullptr) {
  return detail::recurse_plain<Backend>(cfg.infected, cfg.clean, probe);
}

/// Same recurrence evaluated over an explicit work list with an insert-once
/// cache: at most one evaluation per reachable (I,S), no recursion depth to
/// worry about, and values bit-identical to recursive_P.
template <class Backend>
typename Backend::Scalar memoized_P(const Configuration& cfg,
                                    MemoTable<Backend>& memo) {
  using Scalar = typename Backend::Scalar;
  std::vector<Configuration> work{cfg};
  while (!work.empty()) {
    const Configuration c = work.back();
    if (memo.find(c)) {
      work.pop_back();
      continue;
    }
    const long long i = c.infected, s = c.clean;
    if (i == 0 || s == 0 || i == 1) {
      memo.insert(c, i == 0 || s == 0 ? Backend::from_int(0)
                                      : Backend::ratio(1, s));
      work.pop_back();
      continue;
    }
    const Configuration down_mixed{i - 1, s - 1};  // b_1 claims a clean device
    const Configuration down_bb{i - 2, s};         // b_1 claims an infected one
    const auto mixed = memo.find(down_mixed);
    const auto bb = memo.find(down_bb);
    if (mixed && bb) {
      const long long m = i + s - 1;
      Scalar value = Backend::ratio(1, m) + Backend::ratio(s - 1, m) * *mixed +
                     Backend::ratio(i - 1, m) * *bb;
      memo.insert(c, value);
      work.pop_back();
      continue;
    }
    if (!mixed) work.push_back(down_mixed);
    if (!bb) work.push_back(down_bb);
  }
  return *memo.find(cfg);
}

}  // namespace pairprob
