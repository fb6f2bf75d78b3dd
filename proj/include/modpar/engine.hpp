#pragma once

// Bounded worker pool for pure per-prime tasks. Results come back sorted by
// prime, so callers see the same output for any core count or schedule.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "modpar/numth.hpp"

namespace modpar {

/// Thrown by a task whose prime turned out to be unusable (it divides a
/// denominator, say). The batch records it and carries on.
class BadPrime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Any other task failure aborts the batch and names the prime.
class BatchError : public std::runtime_error {
 public:
  BatchError(std::uint64_t prime, const std::string& what)
      : std::runtime_error("task for prime " + std::to_string(prime) + " failed: " + what), prime_(prime) {}
  std::uint64_t prime() const { return prime_; }

 private:
  std::uint64_t prime_;
};

unsigned default_cores();

template <class Snapshot>
struct TaskBatch {
  std::vector<std::uint64_t> primes;
  std::shared_ptr<const Snapshot> snapshot;
  unsigned cores = 1;
  std::uint64_t seed = 0;
};

struct Discard {
  std::uint64_t prime;
  std::string reason;
};

template <class Result>
struct BatchResult {
  std::vector<std::pair<std::uint64_t, Result>> results;  // ascending prime
  std::vector<Discard> discarded;                         // ascending prime
  unsigned peak_concurrency = 0;
};

namespace detail {

/// Runs job(i) for i in [0, count) on at most `cores` threads. Exceptions
/// are captured per index; the lowest failing index is rethrown.
template <class Job>
unsigned run_indexed(std::size_t count, unsigned cores, Job&& job) {
  if (count == 0) return 0;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1U, cores), count));
  std::atomic<std::size_t> next{0};
  std::atomic<unsigned> running{0};
  std::atomic<unsigned> peak{0};
  std::vector<std::exception_ptr> errors(count);

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      const unsigned now = running.fetch_add(1) + 1;
      unsigned seen = peak.load();
      while (now > seen && !peak.compare_exchange_weak(seen, now)) {
      }
      try {
        job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
      running.fetch_sub(1);
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return peak.load();
}

}  // namespace detail

/// Applies `fn(prime, snapshot)` to every task of the batch.
template <class Snapshot, class Fn>
auto parallel_map(const TaskBatch<Snapshot>& batch, Fn&& fn)
    -> BatchResult<std::invoke_result_t<Fn&, std::uint64_t, const Snapshot&>> {
  using Result = std::invoke_result_t<Fn&, std::uint64_t, const Snapshot&>;
  std::vector<std::uint64_t> primes = batch.primes;
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) {
    throw std::invalid_argument("parallel_map: duplicate prime in batch");
  }

  std::vector<std::optional<Result>> slots(primes.size());
  std::vector<std::string> reasons(primes.size());
  BatchResult<Result> out;
  out.peak_concurrency = detail::run_indexed(primes.size(), batch.cores, [&](std::size_t i) {
    try {
      slots[i].emplace(fn(primes[i], *batch.snapshot));
    } catch (const BadPrime& e) {
      reasons[i] = e.what();
    } catch (const ArithmeticError& e) {
      reasons[i] = e.what();
    } catch (const std::exception& e) {
      throw BatchError(primes[i], e.what());
    } catch (...) {
      throw BatchError(primes[i], "unknown exception");
    }
  });
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (slots[i]) {
      out.results.emplace_back(primes[i], std::move(*slots[i]));
    } else {
      out.discarded.push_back({primes[i], reasons[i]});
    }
  }
  return out;
}

/// Evaluates fn(i) for i in [0, count) and returns the results in index order.
template <class Fn>
auto parallel_for(std::size_t count, unsigned cores, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<std::optional<Result>> slots(count);
  detail::run_indexed(count, cores, [&](std::size_t i) { slots[i].emplace(fn(i)); });
  std::vector<Result> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// True iff pred(i) holds for every i. Stops handing out work after the
/// first failure; the answer does not depend on scheduling.
template <class Pred>
bool parallel_all_of(std::size_t count, unsigned cores, Pred&& pred) {
  std::atomic<bool> ok{true};
  detail::run_indexed(count, cores, [&](std::size_t i) {
    if (!ok.load(std::memory_order_relaxed)) return;
    if (!pred(i)) ok.store(false);
  });
  return ok.load();
}

}  // namespace modpar
