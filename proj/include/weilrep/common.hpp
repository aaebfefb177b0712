#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

namespace weilrep {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when a computation would exceed the documented size guards.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

inline std::atomic<unsigned>& worker_count_ref() {
  static std::atomic<unsigned> n{1};
  return n;
}

}  // namespace detail

inline void set_worker_count(unsigned n) { detail::worker_count_ref() = n == 0 ? 1 : n; }
inline unsigned worker_count() { return detail::worker_count_ref().load(); }

/// Runs fn(begin, end) over a partition of [0, n). Results must be written to
/// disjoint slots so the outcome is independent of the worker count.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || n < 2 * workers) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t b = w * chunk;
    std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& th : pool) th.join();
}

inline Int int_pow(Int base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace weilrep
