#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace cplx {

// Deterministic xorshift-style generator. std::uniform_int_distribution is
// implementation-defined, so all seeded search code draws through this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    state_ = x;
    return x * 0x2545f4914f6cdd1dull;
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  // uniform in [0, 1)
  double unit() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }

  // derive an independent stream (used for annealing restarts)
  std::uint64_t fork(std::uint64_t salt) {
    std::uint64_t x = state_ ^ (salt * 0xbf58476d1ce4e5b9ull + 0x94d049bb133111ebull);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    return x ? x : 1;
  }

 private:
  std::uint64_t state_;
};

inline std::size_t hash_combine(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

struct IntVecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = hash_combine(h, std::hash<int>()(x));
    return h;
  }
};

// Runs fn(i) for i in [0,n). jobs<=1 means serial; results must not depend on
// execution order (callers write to disjoint slots).
inline void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t nthreads = std::min<std::size_t>(jobs, n);
  std::vector<std::thread> workers;
  workers.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += nthreads) fn(i);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace cplx
