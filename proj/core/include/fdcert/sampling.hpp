// Copyright 2026 The fdcert Authors
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

#ifndef FDCERT_SAMPLING_HPP_
#define FDCERT_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "fdcert/linalg.hpp"

namespace fdcert {

using Rng = std::mt19937_64;

/// Stream tags keep generators for different purposes decorrelated even when
/// callers reuse a seed.
enum class StreamTag : std::uint32_t {
  kHaarMonteCarlo = 1,
  kProtocolState = 2,
};

/// Generator for substream `index` of `seed`. Depends only on its arguments,
/// so substream i is unaffected by how many other substreams are drawn.
Rng make_substream(std::uint64_t seed, StreamTag tag, std::uint64_t index);

/// Haar-random pure state: normalized vector of i.i.d. standard complex
/// Gaussians. Requires d >= 1.
std::vector<Complex> sample_haar_state(std::size_t d, Rng& rng);

}  // namespace fdcert

#endif  // FDCERT_SAMPLING_HPP_
