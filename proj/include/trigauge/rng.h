// Copyright 2026 The trigauge Authors
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

#ifndef TRIGAUGE_RNG_H_
#define TRIGAUGE_RNG_H_

#include <cstdint>

namespace trigauge {

// Counter-based generator: the i-th output of a stream is
// mix(key + i * golden_gamma), with mix the SplitMix64 finalizer. A stream is
// identified entirely by its key, so split() derives independent child
// streams without touching the parent's position.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(Mix(seed)) {}

  std::uint64_t next() { return Mix(key_ + ++counter_ * kGamma); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  CounterRng split(std::uint64_t stream) const {
    return CounterRng(key_ ^ Mix(stream * kGamma + 0x3c6ef372fe94f82bULL));
  }

  std::uint64_t counter() const { return counter_; }

  static constexpr std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace trigauge

#endif  // TRIGAUGE_RNG_H_
