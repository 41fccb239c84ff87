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

#include <span>

#include <Eigen/Dense>

#include "channel.hpp"

namespace risorient {

struct RateResult {
  double mean_rate = 0.0;  // bits/sec/Hz
  double std_error = 0.0;  // bits/sec/Hz
  int realizations_used = 0;
};

// Singular values of C, descending, via SVD (Jacobi for small matrices, BDC
// beyond). This is the numerically safe evaluation route at high SNR; the
// determinant form lives in the tests as an independent oracle.
Eigen::VectorXd singular_values(const MatrixC &c);

// sum_i log2(1 + rho s_i^2) for the given linear SNR factor rho.
double rate_from_singular_values(const Eigen::VectorXd &s, double rho);

inline double snr_linear(double pt_dbm, double noise_dbm) {
  return std::pow(10.0, (pt_dbm - noise_dbm) / 10.0);
}

// log2 det(I + (Pt/sigma^2) C C^H) evaluated through the singular values.
double achievable_rate(const MatrixC &c, double pt_dbm, double noise_dbm);

// Deterministic, order-insensitive pairwise summation.
double pairwise_sum(std::span<const double> values);

// Mean and standard error over a fixed-order sample.
RateResult reduce_rates(std::span<const double> rates);

// Rate of one realization draw at one rotation under the configured phase
// strategy. Exposed so sweeps and ergodic averaging share one code path and
// stay bit-identical.
double realized_rate(const ScenarioConfig &config, const RealizationDraw &draw,
                     const RotationAngles &rotation, double pt_dbm);

// Singular values of the end-to-end matrix for one draw/rotation; the power
// level then enters only through rho.
Eigen::VectorXd realized_singular_values(const ScenarioConfig &config,
                                         const RealizationDraw &draw,
                                         const RotationAngles &rotation);

// Monte Carlo ergodic rate over config.realizations draws.
RateResult ergodic_rate(const ScenarioConfig &config,
                        const RotationAngles &rotation,
                        PhaseStrategy strategy);
RateResult ergodic_rate(const ScenarioConfig &config,
                        const RotationAngles &rotation);

} // namespace risorient
