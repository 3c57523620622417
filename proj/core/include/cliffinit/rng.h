// Copyright 2026 The cliffinit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLIFFINIT_RNG_H
#define CLIFFINIT_RNG_H

#include <cstdint>
#include <random>

namespace cliffinit {

/// Seeded generator with portable bounded draws. std::uniform_int_distribution is
/// implementation-defined, which would make traces differ between standard libraries.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    /// Uniform integer in [0, n). n must be >= 1.
    uint64_t uniform_index(uint64_t n) {
        uint64_t threshold = (0 - n) % n;
        uint64_t x;
        do {
            x = engine_();
        } while (x < threshold);
        return x % n;
    }

    /// Uniform double in [0, 1).
    double uniform_real() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    uint64_t next_u64() {
        return engine_();
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace cliffinit

#endif
