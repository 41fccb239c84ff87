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

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "channel.hpp"

namespace risorient {

// Per-element reflection phases, each in [0, 2 pi). The implied diagonal
// entries e^{j phi_n} are unit modulus.
struct PhaseConfig {
  std::vector<double> phases;
  // Set when a strategy could not run (for example on zero channels) and the
  // all-zero configuration was returned instead.
  bool degraded_fallback = false;
};

// C = G diag(e^{j phi}) H + D.
MatrixC assemble_end_to_end(const MatrixC &H, const MatrixC &G,
                            const MatrixC &D, const PhaseConfig &phases);

// DominantPair: with u the dominant left singular vector of G and v the
// dominant right singular vector of H, sets phi_n = -arg((u^H G)_n (H v)_n)
// so every cascaded term adds coherently along the dominant pair. Random
// draws i.i.d. uniform phases from the given seed; Zero returns all zeros.
// Zero-norm H or G falls back to Zero with the degraded flag set.
PhaseConfig align_phases(const MatrixC &H, const MatrixC &G,
                         PhaseStrategy strategy,
                         std::uint64_t random_seed = 0);

// Exhaustive search over the quantized grid {2 pi k / 2^bits}^N maximizing
// the achievable rate of G diag(e^{j phi}) H + D. Ties break toward the
// lexicographically smallest phase tuple. Refuses grids beyond 2^20 points.
PhaseConfig brute_force_phases(const MatrixC &H, const MatrixC &G,
                               const MatrixC &D, int bits, double pt_dbm,
                               double noise_dbm, int threads = 1);

// Nearest grid point of an arbitrary phase configuration, for comparing a
// continuous strategy against the quantized oracle.
PhaseConfig quantize_phases(const PhaseConfig &phases, int bits);

} // namespace risorient
