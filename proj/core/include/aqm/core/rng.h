// Copyright 2026 The AQM Toolkit Authors
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

#ifndef AQM_CORE_RNG_H
#define AQM_CORE_RNG_H

#include <cstdint>
#include <random>

namespace aqm {

/// Seeded generator used for every sampling decision in the toolkit.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Doubles are built from the top 53 bits directly instead of going
/// through std::uniform_real_distribution (whose algorithm is unspecified), so
/// sampled outcomes are identical across platforms and standard libraries.
class Rng {
   public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {
    }

    std::uint64_t next_u64() {
        return engine_();
    }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    /// Standard normal via Box-Muller on uniform().
    double normal();

   private:
    std::mt19937_64 engine_;
};

}  // namespace aqm

#endif
