#pragma once

#include <atomic>
#include <cstdint>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fmfire {

/// Sentinel arrival time for cells the fire never reaches.
inline constexpr double kNever = std::numeric_limits<double>::infinity();

inline bool is_never(double t) { return std::isinf(t); }

// Error taxonomy; the CLI maps these to exit codes (usage 2, data 3, numeric 4).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : Error {
  using Error::Error;
};
struct DataError : Error {
  using Error::Error;
};
struct NumericError : Error {
  using Error::Error;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Derives an independent stream seed from a base seed and up to three
/// stream identifiers. Used for per-member / per-task reproducibility.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = seed;
  detail::splitmix64(s);
  s ^= 0xA24BAED4963EE407ull * (a + 1);
  detail::splitmix64(s);
  s ^= 0x9FB21C651E98DF25ull * (b + 1);
  detail::splitmix64(s);
  s ^= 0xE7037ED1A0B428DBull * (c + 1);
  return detail::splitmix64(s);
}

/// Deterministic RNG with explicitly pinned uniform/normal algorithms so
/// results do not depend on the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // burn-in decorrelates trivially related seeds
    detail::splitmix64(state_);
    detail::splitmix64(state_);
  }

  std::uint64_t next_u64() { return detail::splitmix64(state_); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  int uniform_int(int n) {
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
  }

  /// Standard normal via Box-Muller; the second value of each pair is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Child stream keyed by `stream`; independent of this rng's position.
  Rng fork(std::uint64_t stream) const {
    std::uint64_t s = state_;
    return Rng(detail::splitmix64(s) ^ (0xD1B54A32D192ED03ull * (stream + 1)));
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Runs fn(i) for i in [0, n). Each index writes only to its own output slot,
/// so results are identical for any thread count.
template <class Fn>
void parallel_for(std::int64_t n, int threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int nw = static_cast<int>(std::min<std::int64_t>(threads, n));
  pool.reserve(nw);
  for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

inline int default_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace fmfire
