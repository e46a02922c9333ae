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

#include "cshadow/rng.hpp"

#include "cshadow/error.hpp"

#include <limits>

namespace cshadow {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RngStream RngStream::derive(std::uint64_t master_seed, std::uint64_t stream_id) {
    return RngStream(splitmix64(master_seed ^ splitmix64(stream_id + 0x9e3779b97f4a7c15ULL)));
}

RngStream RngStream::derive(std::uint64_t master_seed, std::uint64_t stream_id, std::uint64_t sub_id) {
    return derive(derive(master_seed, stream_id).seed(), sub_id);
}

std::uint64_t RngStream::below(std::uint64_t bound) {
    if (bound == 0) {
        throw DomainError("below() needs a positive bound");
    }
    // Rejection sampling on the largest multiple of `bound`.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r = next();
    while (r >= limit) {
        r = next();
    }
    return r % bound;
}

std::uint64_t RngStream::bits(int count) {
    if (count <= 0) {
        return 0;
    }
    const std::uint64_t r = next();
    return count >= 64 ? r : (r >> (64 - count));
}

} // namespace cshadow
