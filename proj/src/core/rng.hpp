/*****************************************************************************
Copyright 2026 The sector-desk authors.

Licensed under the Apache License, Version 2.0 (the "License"); you may not
use this file except in compliance with the License. You may obtain a copy of
the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
License for the specific language governing permissions and limitations under
the License.
*****************************************************************************/

#pragma once

#include <cstdint>

#include "core/bytes.hpp"

namespace sector {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic generator (xoshiro256**). Every random draw in simulated
/// mode comes from an Rng seeded from the cluster seed, so a run is a pure
/// function of its seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& w : s_) w = x = splitmix64(x);
  }

  uint64_t next() {
    auto rotl = [](uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
    uint64_t result = rotl(s_[1] * 5, 7) * 9;
    uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }
  // Uniform integer in [0, n); n > 0.
  uint64_t below(uint64_t n) { return next() % n; }
  // Uniform integer in [lo, hi].
  uint64_t range(uint64_t lo, uint64_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) { return uniform() < p; }

  uint32_t nonzero_u32() {
    uint32_t v;
    do {
      v = uint32_t(next());
    } while (v == 0);
    return v;
  }

  void fill(Bytes& b, size_t n) {
    b.resize(n);
    size_t i = 0;
    while (i + 8 <= n) {
      uint64_t v = next();
      for (int k = 0; k < 8; ++k) b[i + k] = uint8_t(v >> (k * 8));
      i += 8;
    }
    if (i < n) {
      uint64_t v = next();
      for (; i < n; ++i, v >>= 8) b[i] = uint8_t(v);
    }
  }

  // Derives an independent stream; `salt` names the consumer.
  Rng fork(uint64_t salt) { return Rng(splitmix64(next() ^ salt)); }

 private:
  uint64_t s_[4];
};

}  // namespace sector
