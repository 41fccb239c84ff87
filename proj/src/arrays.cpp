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

#include "arrays.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risorient {

std::vector<Vec3> element_positions(const ArraySpec &spec) {
  if (spec.nx < 1 || spec.ny < 1)
    throw std::invalid_argument("array element counts must be >= 1");
  if (!(spec.spacing_wavelengths > 0.0) ||
      !std::isfinite(spec.spacing_wavelengths))
    throw std::invalid_argument("array spacing must be positive and finite");
  const double d = spec.spacing_wavelengths;
  std::vector<Vec3> pos;
  pos.reserve(static_cast<std::size_t>(spec.count()));
  for (int iz = 0; iz < spec.ny; ++iz)
    for (int iy = 0; iy < spec.nx; ++iy)
      pos.emplace_back(0.0, iy * d, iz * d);
  return pos;
}

SteeringVector steering_vector(const ArraySpec &spec, double azimuth_rad,
                               double elevation_rad) {
  if (!std::isfinite(azimuth_rad) || !std::isfinite(elevation_rad))
    throw std::invalid_argument("steering_vector: angles must be finite");
  const double ce = std::cos(elevation_rad);
  const Vec3 u(ce * std::cos(azimuth_rad), ce * std::sin(azimuth_rad),
               std::sin(elevation_rad));
  const auto pos = element_positions(spec);
  SteeringVector a(static_cast<Eigen::Index>(pos.size()));
  for (std::size_t n = 0; n < pos.size(); ++n) {
    const double phase = 2.0 * std::numbers::pi * pos[n].dot(u);
    a(static_cast<Eigen::Index>(n)) = {std::cos(phase), std::sin(phase)};
  }
  return a;
}

double element_gain(double angle_from_boresight_rad, double q,
                    bool hemisphere_cutoff) {
  if (!(q >= 0.0))
    throw std::invalid_argument("element_gain: exponent must be >= 0");
  const double angle = std::abs(angle_from_boresight_rad);
  if (hemisphere_cutoff && angle >= std::numbers::pi / 2.0)
    return 0.0;
  if (q == 0.0)
    return 1.0;
  const double c = std::abs(std::cos(angle));
  return std::pow(c, q);
}

double angle_from_boresight(const LocalDirection &dir) {
  const double ux = std::cos(dir.elevation_rad) * std::cos(dir.azimuth_rad);
  return std::acos(std::clamp(ux, -1.0, 1.0));
}

} // namespace risorient
