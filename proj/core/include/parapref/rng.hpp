// Copyright 2026 The parapref Authors.
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

#ifndef PARAPREF_RNG_HPP_
#define PARAPREF_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace parapref {

// Seeded RNG with fully specified derivations. std::uniform_*_distribution
// and std::shuffle are implementation-defined, so every draw here is built
// directly from the mt19937_64 stream; identical seeds give identical bytes
// on every platform. All seeded components of the toolkit go through this.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Unbiased integer in [0, n) via rejection sampling. n must be > 0.
  uint64_t next_below(uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v = gen_();
    while (v >= limit) v = gen_();
    return v % n;
  }

  // Uniform double in [0, 1) built from the top 53 bits.
  double next_double() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  bool next_bool() { return (gen_() & 1u) != 0; }

  // Fisher-Yates with explicit draws.
  template <class T>
  void shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(next_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace parapref

#endif  // PARAPREF_RNG_HPP_
