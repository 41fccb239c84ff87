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

#include "rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risorient {

std::uint64_t mix64(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t x = a ^ (b + 0x9E3779B97F4A7C15ull + (a << 6) + (a >> 2));
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double RngStream::gaussian() {
  double u1 = uniform01();
  double u2 = uniform01();
  if (u1 < 0x1.0p-100)
    u1 = 0x1.0p-100;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::complex<double> RngStream::cgaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

int RngStream::poisson(double mean) {
  if (!(mean >= 0.0))
    throw std::invalid_argument("poisson mean must be >= 0");
  if (mean > 64.0)
    throw std::invalid_argument("poisson mean too large for Knuth sampling");
  const double limit = std::exp(-mean);
  int k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= uniform01();
  } while (p > limit);
  return k - 1;
}

double RngStream::laplace(double scale) {
  // Inverse CDF on u in (-1/2, 1/2).
  const double u = uniform01() - 0.5;
  double mag = std::abs(u);
  if (mag >= 0.5)
    mag = std::nexttoward(0.5, 0.0);
  const double tail = std::log1p(-2.0 * mag);
  return (u < 0.0 ? scale : -scale) * tail;
}

} // namespace risorient
