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

#include "rate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "parallel.hpp"
#include "ris_control.hpp"

namespace risorient {

Eigen::VectorXd singular_values(const MatrixC &c) {
  if (c.size() == 0)
    return Eigen::VectorXd();
  if (std::min(c.rows(), c.cols()) >= 32) {
    Eigen::BDCSVD<MatrixC> svd(c);
    return svd.singularValues();
  }
  Eigen::JacobiSVD<MatrixC> svd(c);
  return svd.singularValues();
}

double rate_from_singular_values(const Eigen::VectorXd &s, double rho) {
  if (!(rho >= 0.0))
    throw std::invalid_argument("rate: SNR factor must be >= 0");
  double bits = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    bits += std::log1p(rho * s(i) * s(i));
  return bits / std::numbers::ln2;
}

double achievable_rate(const MatrixC &c, double pt_dbm, double noise_dbm) {
  if (!c.allFinite())
    throw std::invalid_argument("achievable_rate: matrix has non-finite "
                                "entries");
  if (!std::isfinite(pt_dbm) || !std::isfinite(noise_dbm))
    throw std::invalid_argument("achievable_rate: powers must be finite");
  return rate_from_singular_values(singular_values(c),
                                   snr_linear(pt_dbm, noise_dbm));
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double acc = 0.0;
    for (double v : values)
      acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

RateResult reduce_rates(std::span<const double> rates) {
  RateResult r;
  r.realizations_used = static_cast<int>(rates.size());
  if (rates.empty())
    return r;
  r.mean_rate = pairwise_sum(rates) / static_cast<double>(rates.size());
  if (rates.size() > 1) {
    std::vector<double> sq(rates.size());
    for (std::size_t i = 0; i < rates.size(); ++i) {
      const double d = rates[i] - r.mean_rate;
      sq[i] = d * d;
    }
    const double var =
        pairwise_sum(sq) / static_cast<double>(rates.size() - 1);
    r.std_error = std::sqrt(var / static_cast<double>(rates.size()));
  }
  return r;
}

Eigen::VectorXd realized_singular_values(const ScenarioConfig &config,
                                         const RealizationDraw &draw,
                                         const RotationAngles &rotation) {
  const ChannelRealization ch = assemble_realization(config, draw, rotation);
  // A dead cascade leaves C = D exactly; skip the phase search and product.
  if (ch.H.norm() == 0.0 || ch.G.norm() == 0.0)
    return singular_values(ch.D);
  PhaseConfig phases;
  if (config.phases.reoptimize_per_rotation ||
      rotation == RotationAngles{}) {
    phases = align_phases(ch.H, ch.G, config.phases.strategy,
                          mix64(draw.seed, kStreamPhases));
  } else {
    const ChannelRealization base =
        assemble_realization(config, draw, RotationAngles{});
    phases = align_phases(base.H, base.G, config.phases.strategy,
                          mix64(draw.seed, kStreamPhases));
  }
  return singular_values(assemble_end_to_end(ch.H, ch.G, ch.D, phases));
}

double realized_rate(const ScenarioConfig &config, const RealizationDraw &draw,
                     const RotationAngles &rotation, double pt_dbm) {
  return rate_from_singular_values(
      realized_singular_values(config, draw, rotation),
      snr_linear(pt_dbm, config.noise_dbm));
}

RateResult ergodic_rate(const ScenarioConfig &config,
                        const RotationAngles &rotation,
                        PhaseStrategy strategy) {
  ScenarioConfig cfg = config;
  cfg.phases.strategy = strategy;
  return ergodic_rate(cfg, rotation);
}

RateResult ergodic_rate(const ScenarioConfig &config,
                        const RotationAngles &rotation) {
  if (config.realizations < 1)
    throw std::invalid_argument("ergodic_rate: realizations must be >= 1");
  const std::size_t m = static_cast<std::size_t>(config.realizations);
  std::vector<double> rates(m);
  parallel_for(m, config.threads, [&](std::size_t r) {
    const RealizationDraw draw =
        draw_realization_state(config, static_cast<int>(r));
    rates[r] = realized_rate(config, draw, rotation, config.tx_power_dbm);
  });
  return reduce_rates(rates);
}

} // namespace risorient
