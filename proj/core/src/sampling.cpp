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

#include "fdcert/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace fdcert {

Rng make_substream(std::uint64_t seed, StreamTag tag, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

std::vector<Complex> sample_haar_state(std::size_t d, Rng& rng) {
  if (d == 0) throw std::invalid_argument("sample_haar_state: dimension must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> psi(d);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& amp : psi) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      amp = Complex(re, im);
      norm2 += re * re + im * im;
    }
  } while (norm2 == 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& amp : psi) amp *= inv;
  return psi;
}

}  // namespace fdcert
