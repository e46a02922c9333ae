// Copyright 2026 The cshadow Authors
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

#pragma once

#include <cstdint>
#include <random>

namespace cshadow {

/// SplitMix64 finalizer; used only to derive stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// A named, seeded pseudo-random stream.
///
/// Streams are derived from a master seed by the rule
///
///     seed(stream_id) = splitmix64(master ^ splitmix64(stream_id + 0x9e3779b97f4a7c15))
///
/// and drive a std::mt19937_64 engine. Distribution helpers below are written
/// directly on top of the raw 64-bit output so sequences are identical across
/// standard-library implementations.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    static RngStream derive(std::uint64_t master_seed, std::uint64_t stream_id);

    /// Two-level derivation, e.g. (experiment point, replica).
    static RngStream derive(std::uint64_t master_seed, std::uint64_t stream_id, std::uint64_t sub_id);

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). `bound` must be positive.
    std::uint64_t below(std::uint64_t bound);

    bool bit() { return (next() >> 63) != 0; }

    /// `count` independent fair bits packed into the low bits of the result (count <= 64).
    std::uint64_t bits(int count);

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace cshadow
