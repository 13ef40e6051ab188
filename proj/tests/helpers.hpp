#pragma once

#include <random>
#include <vector>

#include "nefwall/picard.hpp"

namespace nefwall::testing {

inline Divisor dv(long d, std::vector<long> m) {
  std::vector<Int> mm(m.begin(), m.end());
  return Divisor(Int(d), std::move(mm));
}

inline Divisor hom(int n, long d, long m) { return Divisor::homogeneous(n, Int(d), Int(m)); }

// Deterministic generator for property tests.
class RandomDivisors {
 public:
  explicit RandomDivisors(unsigned seed = 20240817u) : rng_(seed) {}

  int n(int lo = 1, int hi = 30) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Divisor divisor(int n, long dlo = -40, long dhi = 200, long mabs = 25) {
    std::uniform_int_distribution<long> dd(dlo, dhi), dm(-mabs, mabs);
    std::vector<Int> m(n);
    for (auto& v : m) v = Int(dm(rng_));
    return Divisor(Int(dd(rng_)), std::move(m));
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace nefwall::testing
