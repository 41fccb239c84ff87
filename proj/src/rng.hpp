// SPDX-License-Identifier: Apache-2.0
//
// risorient — orientation-aware link simulator for RIS-assisted MIMO
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace risorient {

// Seed-splitting rule used everywhere randomness is derived. Documented so a
// reimplementation can reproduce every stream:
//   x = a XOR (b + 0x9E3779B97F4A7C15 + (a << 6) + (a >> 2))
// followed by the SplitMix64 finalizer. Streams never share state; each
// (master_seed, realization_index, stream_id) tuple owns its own generator.
std::uint64_t mix64(std::uint64_t a, std::uint64_t b) noexcept;

// Stream ids for per-realization sub-generators.
enum : std::uint64_t {
  kStreamLinkBsRis = 1,
  kStreamLinkRisUser = 2,
  kStreamLinkBsUser = 3,
  kStreamPhases = 4,
};

// Deterministic random stream: std::mt19937_64 core with hand-rolled
// transforms. The standard distribution classes are implementation-defined,
// so sampled sequences would differ between standard libraries; these
// transforms pin the exact sequence for a given seed.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  bool bernoulli(double p) { return uniform01() < p; }

  // Box-Muller, no caching: every call consumes exactly two uniforms.
  double gaussian();

  // Re/Im each N(0, 1/2) so E|z|^2 = 1.
  std::complex<double> cgaussian();

  // Knuth's product-of-uniforms method; fine for the small means used here.
  int poisson(double mean);

  // Zero-mean Laplace with the given scale (std = scale * sqrt(2)).
  double laplace(double scale);

private:
  std::mt19937_64 eng_;
};

} // namespace risorient
