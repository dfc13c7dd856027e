// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RABS_RNG_HPP_
#define RABS_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>

namespace rabs {

// Identifies one Monte Carlo trial. Each trial gets its own substream derived
// by hashing (master_seed, trial_index), so trials can run in any order or in
// parallel and still reproduce bit-identical results.
struct SeedSpec {
  std::uint64_t master_seed{1};
  std::uint32_t trial_index{0};
};

// splitmix64 finalizer (Steele, Lea, Flood 2014). Used purely as a mixer.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(const SeedSpec& s) {
  return splitmix64(splitmix64(s.master_seed) ^
                    (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(s.trial_index) + 1)));
}

// Deterministic generator wrapper. The engine sequence is fixed by the
// standard (mt19937_64) and the float/normal derivations below are our own,
// so output is identical across compilers and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  explicit Rng(const SeedSpec& s) : Rng(substream_seed(s)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  // Box-Muller with a cached spare; avoids std::normal_distribution, whose
  // sequence is implementation-defined.
  double normal(double mean, double sigma) {
    if (have_spare_) {
      have_spare_ = false;
      return mean + sigma * spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    spare_ = mag * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return mean + sigma * mag * std::cos(kTwoPi * u2);
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_{false};
  double spare_{0.0};
};

}  // namespace rabs

#endif  // RABS_RNG_HPP_
